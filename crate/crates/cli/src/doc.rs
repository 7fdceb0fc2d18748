//! TOML input documents.
//!
//! ```toml
//! variables = ["x", "y"]
//! generators = [
//!   [{ coeff = "1", exp = [4, 0] }, { coeff = "1", exp = [0, 4] }],
//!   "x*y^2 + x^2*y",
//! ]
//! ```
//!
//! A family is either `kind = "power"` with an `[ideal]` table, or
//! `kind = "prefix"` with `[[members]]` tables, an optional `period` and an
//! optional free-text `rule`. Members may omit `variables` when the family
//! declares them at top level.

use serde::{Deserialize, Serialize};

use newtonpoly::family::FamilySpec;
use newtonpoly::series::{ExponentVector, LocalElement};
use newtonpoly::{format_rational, parse_rational, Element, Family, Ideal};

use crate::error::CliError;
use crate::infix::parse_infix;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coeff {
    Int(i64),
    Text(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermDoc {
    pub coeff: Coeff,
    pub exp: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GeneratorDoc {
    Infix(String),
    Terms(Vec<TermDoc>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealDocument {
    pub variables: Vec<String>,
    pub generators: Vec<GeneratorDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MemberDoc {
    pub variables: Option<Vec<String>>,
    pub generators: Vec<GeneratorDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum FamilyDocument {
    Power {
        ideal: IdealDocument,
    },
    Prefix {
        variables: Option<Vec<String>>,
        members: Vec<MemberDoc>,
        period: Option<usize>,
        rule: Option<String>,
    },
}

fn element(gen: &GeneratorDoc, names: &[String], at: &str) -> Result<Element, CliError> {
    let d = names.len();
    match gen {
        GeneratorDoc::Infix(s) => parse_infix(s, names).map_err(|e| CliError::Parse(format!("{at}: {e}"))),
        GeneratorDoc::Terms(terms) => {
            let mut pairs = Vec::with_capacity(terms.len());
            for (j, t) in terms.iter().enumerate() {
                let here = format!("{at}[{j}]");
                if t.exp.len() != d {
                    return Err(CliError::Parse(format!(
                        "{here}.exp: expected {d} entries, found {}",
                        t.exp.len()
                    )));
                }
                let c = match &t.coeff {
                    Coeff::Int(n) => parse_rational(&n.to_string()),
                    Coeff::Text(s) => parse_rational(s),
                }
                .ok_or_else(|| CliError::Parse(format!("{here}.coeff: not an integer or p/q rational")))?;
                if num_traits::Zero::is_zero(&c) {
                    return Err(CliError::Parse(format!("{here}.coeff: coefficients must be nonzero")));
                }
                pairs.push((c, ExponentVector::new(t.exp.clone())));
            }
            LocalElement::from_terms(d, pairs).map_err(|e| CliError::Parse(format!("{at}: {e}")))
        }
    }
}

fn check_names(names: &[String], at: &str) -> Result<(), CliError> {
    if names.is_empty() {
        return Err(CliError::Parse(format!("{at}variables: at least one variable is required")));
    }
    for (i, n) in names.iter().enumerate() {
        if names[..i].contains(n) {
            return Err(CliError::Parse(format!("{at}variables: duplicate name '{n}'")));
        }
    }
    Ok(())
}

fn build_ideal(names: &[String], gens: &[GeneratorDoc], prefix: &str) -> Result<Ideal, CliError> {
    check_names(names, prefix)?;
    if gens.is_empty() {
        return Err(CliError::Parse(format!("{prefix}generators: the list is empty")));
    }
    let elements = gens
        .iter()
        .enumerate()
        .map(|(i, g)| element(g, names, &format!("{prefix}generators[{i}]")))
        .collect::<Result<Vec<_>, _>>()?;
    Ideal::new(names.len(), elements).map_err(CliError::Lib)
}

impl IdealDocument {
    pub fn parse(src: &str) -> Result<Self, CliError> {
        toml::from_str(src).map_err(|e| CliError::Parse(e.to_string()))
    }

    pub fn to_ideal(&self) -> Result<Ideal, CliError> {
        build_ideal(&self.variables, &self.generators, "")
    }

    /// Canonical document for an ideal, one term list per generator.
    pub fn from_ideal(ideal: &Ideal, variables: Vec<String>) -> Self {
        let generators = ideal
            .generators()
            .iter()
            .map(|g| {
                GeneratorDoc::Terms(
                    g.terms()
                        .map(|(e, c)| TermDoc {
                            coeff: Coeff::Text(format_rational(c)),
                            exp: e.entries().to_vec(),
                        })
                        .collect(),
                )
            })
            .collect();
        Self { variables, generators }
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("documents always serialize")
    }
}

impl FamilyDocument {
    pub fn parse(src: &str) -> Result<Self, CliError> {
        toml::from_str(src).map_err(|e| CliError::Parse(e.to_string()))
    }

    pub fn variables(&self) -> Vec<String> {
        match self {
            FamilyDocument::Power { ideal } => ideal.variables.clone(),
            FamilyDocument::Prefix { variables, members, .. } => variables
                .clone()
                .or_else(|| members.first().and_then(|m| m.variables.clone()))
                .unwrap_or_default(),
        }
    }

    pub fn to_family(&self) -> Result<Family, CliError> {
        match self {
            FamilyDocument::Power { ideal } => Ok(FamilySpec::power(ideal.to_ideal()?)),
            FamilyDocument::Prefix {
                variables,
                members,
                period,
                rule,
            } => {
                if members.is_empty() {
                    return Err(CliError::Parse("members: the prefix is empty".into()));
                }
                let mut ideals = Vec::with_capacity(members.len());
                for (i, m) in members.iter().enumerate() {
                    let at = format!("members[{i}].");
                    let names = m.variables.as_ref().or(variables.as_ref()).ok_or_else(|| {
                        CliError::Parse(format!("{at}variables: missing, and the family declares none"))
                    })?;
                    if let (Some(top), Some(own)) = (variables, &m.variables) {
                        if top != own {
                            return Err(CliError::Parse(format!("{at}variables: differ from the family's")));
                        }
                    }
                    ideals.push(build_ideal(names, &m.generators, &at)?);
                }
                if let Some(c) = period {
                    if *c == 0 || *c > ideals.len() {
                        return Err(CliError::Parse(format!(
                            "period: {c} is not an index of the prefix 1..={}",
                            ideals.len()
                        )));
                    }
                }
                FamilySpec::prefix(ideals, *period, rule.clone()).map_err(CliError::Lib)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const NOT_NND: &str = r#"
variables = ["x", "y"]
generators = [
  [{ coeff = "1", exp = [4, 0] }, { coeff = 1, exp = [0, 4] }],
  "x*y^2 + x^2*y",
]
"#;

    #[test]
    fn reads_both_generator_forms() {
        let ideal = IdealDocument::parse(NOT_NND).unwrap().to_ideal().unwrap();
        let again = IdealDocument::parse(
            "variables = [\"x\", \"y\"]\ngenerators = [\"x^4 + y^4\", [{ coeff = \"1\", exp = [1, 2] }, { coeff = \"1\", exp = [2, 1] }]]",
        )
        .unwrap()
        .to_ideal()
        .unwrap();
        assert_eq!(ideal, again);
    }

    #[test]
    fn document_round_trip() {
        let ideal = IdealDocument::parse(NOT_NND).unwrap().to_ideal().unwrap();
        let doc = IdealDocument::from_ideal(&ideal, vec!["x".into(), "y".into()]);
        let back = IdealDocument::parse(&doc.to_toml()).unwrap().to_ideal().unwrap();
        assert_eq!(back, ideal);
    }

    #[test]
    fn field_diagnostics() {
        let err = |src: &str| match IdealDocument::parse(src).and_then(|d| d.to_ideal()) {
            Err(CliError::Parse(m)) => m,
            other => panic!("expected a parse error, got {other:?}"),
        };
        assert_eq!(
            err("variables = [\"x\", \"y\"]\ngenerators = [[{ coeff = \"1\", exp = [1, 2, 3] }]]"),
            "generators[0][0].exp: expected 2 entries, found 3"
        );
        assert_eq!(
            err("variables = [\"x\", \"y\"]\ngenerators = [[{ coeff = \"0\", exp = [1, 2] }]]"),
            "generators[0][0].coeff: coefficients must be nonzero"
        );
        assert_eq!(
            err("variables = [\"x\", \"y\"]\ngenerators = [\"x\", [{ coeff = \"0.5\", exp = [1, 2] }]]"),
            "generators[1][0].coeff: not an integer or p/q rational"
        );
        assert_eq!(
            err("variables = [\"x\", \"y\"]\ngenerators = [\"x + w\"]"),
            "generators[0]: column 5: unknown variable 'w'"
        );
        assert!(err("variables = [\"x\"]\ngenerators = [\"x\"]\nextra = 1").contains("extra"));
        assert!(err("variables = [\"x\"\n").contains("line"));
    }

    #[test]
    fn family_documents() {
        let src = r#"
kind = "prefix"
variables = ["x", "y"]
period = 2
rule = "I_2n = I_2^n"

[[members]]
generators = ["x + y"]

[[members]]
generators = ["x^2 + y^2", "x*y"]
"#;
        let f = FamilyDocument::parse(src).unwrap().to_family().unwrap();
        assert_eq!(f.declared_period(), Some(2));
        let power = "kind = \"power\"\n[ideal]\nvariables = [\"x\", \"y\"]\ngenerators = [\"x^2\", \"y^3\"]\n";
        assert!(matches!(
            FamilyDocument::parse(power).unwrap().to_family().unwrap(),
            FamilySpec::Power(_)
        ));
        let bad = "kind = \"prefix\"\nperiod = 3\nvariables = [\"x\"]\n[[members]]\ngenerators = [\"x\"]\n";
        assert!(matches!(
            FamilyDocument::parse(bad).unwrap().to_family(),
            Err(CliError::Parse(m)) if m.starts_with("period")
        ));
    }
}
