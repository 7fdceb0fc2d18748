//! Command-line front end for `newtonpoly`.

pub mod doc;
pub mod error;
pub mod infix;
pub mod report;
pub mod svg;

use std::fmt::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use newtonpoly::family::{
    limiting_body, mult_equals_covol_check, multiplicity_index, noetherian_report_for, Stabilization,
};
use newtonpoly::geometry::{check_cofinite, covolume, Facet};
use newtonpoly::monomial::{ideal_i0, MonomialIdeal};
use newtonpoly::nnd::{face_report, multiplicity_comparison, FaceReport, MultiplicityComparison};
use newtonpoly::oracle::OracleConfig;
use newtonpoly::{format_rational, Ideal, Polyhedron, Rational};
use num_bigint::BigInt;

use crate::doc::{FamilyDocument, IdealDocument};
use crate::error::CliError;
use crate::report::{face_json, point_json, FamilyJson, Report};

#[derive(Debug, Parser)]
#[command(name = "newtonpoly", version, about = "Newton polyhedra, NND certification and multiplicities of ideals")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Print the machine-readable JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct OracleArgs {
    /// Largest truncation degree for colength computations.
    #[arg(long, default_value_t = 40)]
    pub max_degree: usize,
    /// Largest power of the ideal used for multiplicities.
    #[arg(long, default_value_t = 8)]
    pub max_power: usize,
}

impl OracleArgs {
    fn config(&self) -> OracleConfig {
        OracleConfig {
            max_degree: self.max_degree,
            max_power: self.max_power,
            ..OracleConfig::default()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Route {
    Face,
    Mult,
    Both,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Vertices and facets of the Newton polyhedron.
    Gamma {
        input: PathBuf,
        /// Write a staircase plot (d = 2).
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Co-volume of the Newton polyhedron.
    Covol { input: PathBuf },
    /// Oracle multiplicity against d! times the co-volume.
    Mult {
        input: PathBuf,
        #[command(flatten)]
        oracle: OracleArgs,
    },
    /// Newton non-degeneracy by the face and/or multiplicity criterion.
    Nnd {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Route::Both)]
        route: Route,
        #[command(flatten)]
        oracle: OracleArgs,
    },
    /// Limiting body, multiplicity and Noetherian report of a graded family.
    Family {
        input: PathBuf,
        /// Number of family members examined.
        #[arg(long, default_value_t = 40)]
        budget: usize,
        #[command(flatten)]
        oracle: OracleArgs,
    },
}

/// Result of one invocation.
#[derive(Debug)]
pub struct Outcome {
    pub text: String,
    pub report: Report,
    pub exit_code: i32,
}

fn read(path: &Path) -> Result<String, CliError> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut s)
            .map_err(|e| CliError::Parse(format!("stdin: {e}")))?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

fn load_ideal(path: &Path) -> Result<(Ideal, Vec<String>), CliError> {
    let doc = IdealDocument::parse(&read(path)?)?;
    Ok((doc.to_ideal()?, doc.variables.clone()))
}

fn monomial_name(exp: &[u32], names: &[String]) -> String {
    let parts: Vec<String> = exp
        .iter()
        .zip(names)
        .filter(|(e, _)| **e > 0)
        .map(|(e, n)| if *e == 1 { n.clone() } else { format!("{n}^{e}") })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

fn facet_text(f: &Facet<BigInt>, names: &[String]) -> String {
    let lhs: Vec<String> = f
        .normal
        .iter()
        .zip(names)
        .filter(|(n, _)| **n != BigInt::from(0))
        .map(|(n, v)| if *n == BigInt::from(1) { v.clone() } else { format!("{n}*{v}") })
        .collect();
    format!("{} >= {}", lhs.join(" + "), format_rational(&f.level))
}

fn polyhedron_text(p: &Polyhedron, names: &[String], out: &mut String) {
    writeln!(out, "vertices:").unwrap();
    for v in p.vertices() {
        writeln!(out, "  ({})", point_json(v).join(",")).unwrap();
    }
    writeln!(out, "facets:").unwrap();
    for f in p.facets() {
        writeln!(out, "  {}", facet_text(f, names)).unwrap();
    }
}

fn closure_text(m: &MonomialIdeal, names: &[String]) -> String {
    let gens: Vec<String> = m.generators().iter().map(|g| monomial_name(g.entries(), names)).collect();
    format!("({})", gens.join(", "))
}

fn closure_json(m: &MonomialIdeal) -> Vec<Vec<u32>> {
    m.generators().iter().map(|g| g.entries().to_vec()).collect()
}

fn d_factorial(d: usize) -> Rational {
    Rational::from_integer((1..=d).fold(BigInt::from(1), |acc, k| acc * BigInt::from(k)))
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Gamma { input, svg } => cmd_gamma(input, svg.as_deref()),
        Command::Covol { input } => cmd_covol(input),
        Command::Mult { input, oracle } => cmd_mult(input, &oracle.config()),
        Command::Nnd { input, route, oracle } => cmd_nnd(input, *route, &oracle.config()),
        Command::Family { input, budget, oracle } => cmd_family(input, *budget, &oracle.config()),
    }
}

fn ok(text: String, report: Report) -> Result<Outcome, CliError> {
    Ok(Outcome {
        text,
        report,
        exit_code: 0,
    })
}

pub fn cmd_gamma(input: &Path, svg: Option<&Path>) -> Result<Outcome, CliError> {
    let (ideal, names) = load_ideal(input)?;
    let gamma = ideal.newton_polyhedron()?;
    let mut text = String::new();
    polyhedron_text(&gamma, &names, &mut text);
    if let Some(path) = svg {
        let drawing = svg::render(&gamma)?;
        std::fs::write(path, drawing).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
        writeln!(text, "plot written to {}", path.display()).unwrap();
    }
    ok(text, Report::with_polyhedron(&gamma))
}

fn covol_part(gamma: &Polyhedron, report: &mut Report, text: &mut String) -> Result<Rational, CliError> {
    let cov = covolume(gamma)?;
    let dfc = cov.clone() * d_factorial(gamma.dim());
    writeln!(text, "covol = {}", format_rational(&cov)).unwrap();
    writeln!(text, "d!covol = {}", format_rational(&dfc)).unwrap();
    report.covol = Some(format_rational(&cov));
    report.d_factorial_covol = Some(format_rational(&dfc));
    Ok(dfc)
}

pub fn cmd_covol(input: &Path) -> Result<Outcome, CliError> {
    let (ideal, _) = load_ideal(input)?;
    let gamma = ideal.newton_polyhedron()?;
    let mut report = Report::with_polyhedron(&gamma);
    let mut text = String::new();
    covol_part(&gamma, &mut report, &mut text)?;
    ok(text, report)
}

fn comparison_text(cmp: &MultiplicityComparison<BigInt>, text: &mut String) {
    writeln!(text, "covol = {}", format_rational(&cmp.covolume)).unwrap();
    writeln!(text, "d!covol = {}", format_rational(&cmp.d_factorial_covolume)).unwrap();
    writeln!(text, "e = {}", cmp.multiplicity).unwrap();
    if cmp.is_equal() {
        writeln!(text, "verdict: EQUAL").unwrap();
    } else {
        writeln!(text, "verdict: UNEQUAL (gap {})", format_rational(&cmp.gap())).unwrap();
    }
}

fn comparison_report(cmp: &MultiplicityComparison<BigInt>, report: &mut Report) {
    report.covol = Some(format_rational(&cmp.covolume));
    report.d_factorial_covol = Some(format_rational(&cmp.d_factorial_covolume));
    report.multiplicity = Some(cmp.multiplicity.to_string());
}

pub fn cmd_mult(input: &Path, cfg: &OracleConfig) -> Result<Outcome, CliError> {
    let (ideal, _) = load_ideal(input)?;
    let gamma = ideal.newton_polyhedron()?;
    let cmp = multiplicity_comparison(&ideal, cfg)?;
    let mut report = Report::with_polyhedron(&gamma);
    comparison_report(&cmp, &mut report);
    let mut text = String::new();
    comparison_text(&cmp, &mut text);
    ok(text, report)
}

fn face_text(fr: &FaceReport<BigInt>, text: &mut String) {
    writeln!(text, "face route:").unwrap();
    for v in &fr.faces {
        let (kind, shown) = if v.face.is_vertex() {
            ("vertex", format!("({})", point_json(&v.face.vertices[0]).join(",")))
        } else {
            ("edge", v.face.to_string())
        };
        let verdict = if v.nondegenerate { "ok" } else { "DEGENERATE" };
        match &v.system {
            Some(sys) => writeln!(text, "  {kind} {shown}: {verdict}, system {sys}").unwrap(),
            None => writeln!(text, "  {kind} {shown}: {verdict}").unwrap(),
        }
    }
}

pub fn cmd_nnd(input: &Path, route: Route, cfg: &OracleConfig) -> Result<Outcome, CliError> {
    let (ideal, names) = load_ideal(input)?;
    let gamma = ideal.newton_polyhedron()?;
    let mut report = Report::with_polyhedron(&gamma);
    let mut text = String::new();

    let faces = match route {
        Route::Face | Route::Both => Some(face_report(&ideal)?),
        Route::Mult => None,
    };
    if let Some(fr) = &faces {
        face_text(fr, &mut text);
        report.failing_faces = fr.failing_faces().into_iter().map(face_json).collect();
    }
    let cmp = match route {
        Route::Mult | Route::Both => Some(multiplicity_comparison(&ideal, cfg)?),
        Route::Face => None,
    };
    if let Some(c) = &cmp {
        writeln!(text, "multiplicity route:").unwrap();
        let mut sub = String::new();
        comparison_text(c, &mut sub);
        for line in sub.lines() {
            writeln!(text, "  {line}").unwrap();
        }
        comparison_report(c, &mut report);
    }

    let face_verdict = faces.as_ref().map(|f| f.is_nnd());
    let mult_verdict = cmp.as_ref().map(|c| c.is_equal());
    let nnd = mult_verdict.or(face_verdict).expect("at least one route ran");
    report.nnd = Some(nnd);
    writeln!(text, "verdict: {}", if nnd { "NND" } else { "NOT NND" }).unwrap();
    if let Some(fr) = &faces {
        let failing: Vec<String> = fr.failing_faces().iter().map(|f| f.to_string()).collect();
        if !failing.is_empty() {
            writeln!(text, "failing faces: {}", failing.join(", ")).unwrap();
        }
    }
    if nnd && check_cofinite(&gamma).is_ok() {
        let closure = ideal_i0(&gamma);
        writeln!(text, "integral closure: {}", closure_text(&closure, &names)).unwrap();
        report.closure = Some(closure_json(&closure));
    }

    let mut exit_code = 0;
    if let (Some(f), Some(m)) = (face_verdict, mult_verdict) {
        if f != m {
            writeln!(
                text,
                "ROUTE DISAGREEMENT: face route says {}, multiplicity route says {}",
                if f { "NND" } else { "NOT NND" },
                if m { "NND" } else { "NOT NND" }
            )
            .unwrap();
            exit_code = CliError::RouteDisagreement(String::new()).exit_code();
        }
    }
    Ok(Outcome {
        text,
        report,
        exit_code,
    })
}

pub fn cmd_family(input: &Path, budget: usize, cfg: &OracleConfig) -> Result<Outcome, CliError> {
    let doc = FamilyDocument::parse(&read(input)?)?;
    let names = doc.variables();
    let family = doc.to_family()?;
    let body = limiting_body(&family, budget)?;
    let noeth = noetherian_report_for(&family, &body)?;
    let mut text = String::new();
    let mut fam = FamilyJson {
        c: body.period(),
        noetherian: noeth.verdict.to_string(),
        ..FamilyJson::default()
    };
    writeln!(text, "members examined: {}", body.budget()).unwrap();
    for axis in 0..family.dim() {
        let xs = body.axis_intercepts(axis);
        let shown: Vec<String> = xs
            .iter()
            .map(|x| x.as_ref().map_or("-".into(), format_rational))
            .collect();
        writeln!(text, "axis intercepts of (1/n)Γ(I_n) on {}: {}", names[axis], shown.join(", ")).unwrap();
        fam.axis_intercepts.push(xs.iter().map(|x| x.as_ref().map(format_rational)).collect());
    }
    let chain = body.chain_violations();
    if !chain.is_empty() {
        writeln!(text, "warning: scaling chain fails at (n, k) = {chain:?}").unwrap();
    }
    let graded = body.gradedness_violations();
    if !graded.is_empty() {
        writeln!(text, "warning: Γ(I_p) + Γ(I_q) ⊄ Γ(I_p+q) at (p, q) = {graded:?}").unwrap();
    }

    let mut report = Report::default();
    match body.status {
        Stabilization::NotUpTo(n) => {
            writeln!(text, "status: not stabilized up to N = {n}").unwrap();
        }
        Stabilization::At(c) => {
            let closure = body.closure().expect("stabilized");
            report = Report::with_polyhedron(closure);
            writeln!(text, "status: stabilized at c = {c}").unwrap();
            writeln!(text, "closure of C(I): {closure}").unwrap();
            let index = multiplicity_index(&family, &body, cfg)?;
            let check = mult_equals_covol_check(&family, index, cfg)?;
            if index != c {
                writeln!(text, "multiplicity read at I_{index} (I_{c} is not m-primary)").unwrap();
            }
            writeln!(text, "e = {}", format_rational(&check.multiplicity)).unwrap();
            writeln!(text, "d!covol = {}", format_rational(&check.d_factorial_covolume)).unwrap();
            let verdict = if check.is_equal() { "EQUAL" } else { "UNEQUAL" };
            if check.is_equal() {
                writeln!(text, "theorem check: EQUAL, I_{index} is NND").unwrap();
            } else {
                writeln!(text, "theorem check: UNEQUAL (gap {})", format_rational(&check.gap())).unwrap();
                let failing: Vec<String> = check.failing_faces.iter().map(|f| f.to_string()).collect();
                if !failing.is_empty() {
                    writeln!(text, "failing faces: {}", failing.join(", ")).unwrap();
                }
            }
            report.covol = Some(format_rational(&check.covolume));
            report.d_factorial_covol = Some(format_rational(&check.d_factorial_covolume));
            report.multiplicity = Some(format_rational(&check.multiplicity));
            report.nnd = Some(check.is_equal());
            report.failing_faces = check.failing_faces.iter().map(face_json).collect();
            fam.e = Some(format_rational(&check.multiplicity));
            fam.d_factorial_covol = Some(format_rational(&check.d_factorial_covolume));
            fam.verdict = Some(verdict.into());
        }
    }
    writeln!(text, "noetherian: {}", noeth.verdict).unwrap();
    report.family = Some(fam);
    ok(text, report)
}
