//! Graded families `{I_n}` with `I_p·I_q ⊆ I_{p+q}`.
//!
//! A family is either the powers of one ideal or an explicit prefix
//! `I_1, …, I_N`, optionally with a declared period `c` meaning
//! `I_{kc} = I_c^k`. Everything here is read off the scaled polyhedra
//! `(1/n)Γ(I_n)`, whose union is the limiting body `C(𝓘)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::geometry::{covolume, CompactFace, StaircasePolyhedron};
use crate::nnd::{face_report, factorial};
use crate::oracle::{multiplicity, OracleConfig};
use crate::scalar::{format_rational, Int, Q};
use crate::series::IdealPresentation;

/// How a graded family is presented.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec<Z: Int> {
    /// `I_n = I^n`.
    Power(IdealPresentation<Z>),
    /// `I_1, …, I_N` as given.
    Prefix {
        ideals: Vec<IdealPresentation<Z>>,
        period: Option<usize>,
        rule: Option<String>,
    },
}

impl<Z: Int> FamilySpec<Z> {
    pub fn power(ideal: IdealPresentation<Z>) -> Self {
        FamilySpec::Power(ideal)
    }

    pub fn prefix(ideals: Vec<IdealPresentation<Z>>, period: Option<usize>, rule: Option<String>) -> Result<Self> {
        let first = ideals.first().ok_or_else(|| Error::Domain("family prefix is empty".into()))?;
        for i in &ideals {
            crate::error::check_dim(first.dim(), i.dim())?;
        }
        if let Some(c) = period {
            if c == 0 || c > ideals.len() {
                return Err(Error::Domain(format!(
                    "declared period {c} is not an index of the prefix 1..={}",
                    ideals.len()
                )));
            }
        }
        Ok(FamilySpec::Prefix { ideals, period, rule })
    }

    /// Prefix `I_1..I_n` produced by a rule `k ↦ I_k`.
    pub fn from_rule(
        n: usize,
        label: &str,
        rule: impl Fn(usize) -> Result<IdealPresentation<Z>>,
    ) -> Result<Self> {
        let ideals = (1..=n).map(rule).collect::<Result<Vec<_>>>()?;
        Self::prefix(ideals, None, Some(label.to_string()))
    }

    pub fn dim(&self) -> usize {
        match self {
            FamilySpec::Power(i) => i.dim(),
            FamilySpec::Prefix { ideals, .. } => ideals[0].dim(),
        }
    }

    pub fn declared_period(&self) -> Option<usize> {
        match self {
            FamilySpec::Power(_) => Some(1),
            FamilySpec::Prefix { period, .. } => *period,
        }
    }

    /// Number of members available within `budget`.
    pub fn available(&self, budget: usize) -> usize {
        match self {
            FamilySpec::Power(_) => budget,
            FamilySpec::Prefix { ideals, .. } => ideals.len().min(budget),
        }
    }

    /// `I_n` for `n ≥ 1`, if known.
    pub fn member(&self, n: usize) -> Option<Result<IdealPresentation<Z>>> {
        if n == 0 {
            return None;
        }
        match self {
            FamilySpec::Power(i) => Some(i.power(n as u32)),
            FamilySpec::Prefix { ideals, .. } => ideals.get(n - 1).cloned().map(Ok),
        }
    }

    /// `Γ(I_n)`, using `Γ(I^n) = nΓ(I)` for power families.
    pub fn gamma(&self, n: usize) -> Option<Result<StaircasePolyhedron<Z>>> {
        if n == 0 {
            return None;
        }
        match self {
            FamilySpec::Power(i) => Some(i.newton_polyhedron().and_then(|p| p.scale_int(n as i64))),
            FamilySpec::Prefix { ideals, .. } => ideals.get(n - 1).map(|i| i.newton_polyhedron()),
        }
    }
}

/// Stabilization status of the scaled prefix polyhedra.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stabilization {
    /// `(1/c)Γ(I_c) = (1/kc)Γ(I_{kc})` for every available `kc`.
    At(usize),
    NotUpTo(usize),
}

/// The scaled prefix polyhedra `(1/n)Γ(I_n)` for `n ≤ N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LimitingBody<Z: Int> {
    pub dim: usize,
    /// `scaled[n - 1] = (1/n)Γ(I_n)`.
    pub scaled: Vec<StaircasePolyhedron<Z>>,
    pub status: Stabilization,
    pub declared_period: Option<usize>,
}

impl<Z: Int> LimitingBody<Z> {
    pub fn budget(&self) -> usize {
        self.scaled.len()
    }

    pub fn scaled(&self, n: usize) -> &StaircasePolyhedron<Z> {
        &self.scaled[n - 1]
    }

    pub fn period(&self) -> Option<usize> {
        match self.status {
            Stabilization::At(c) => Some(c),
            Stabilization::NotUpTo(_) => None,
        }
    }

    /// The closure of `C(𝓘)` once stabilized: `(1/c)Γ(I_c)`.
    pub fn closure(&self) -> Option<&StaircasePolyhedron<Z>> {
        self.period().map(|c| self.scaled(c))
    }

    /// Intercepts of `(1/n)Γ(I_n)` on one axis, `n = 1..=N`.
    pub fn axis_intercepts(&self, axis: usize) -> Vec<Option<Q<Z>>> {
        self.scaled.iter().map(|p| p.axis_intercept(axis)).collect()
    }

    /// Pairs `(n, k)` breaking `(1/n)Γ(I_n) ⊆ (1/nk)Γ(I_{nk})`.
    pub fn chain_violations(&self) -> Vec<(usize, usize)> {
        let n_max = self.budget();
        let mut bad = Vec::new();
        for n in 1..=n_max {
            for k in 2..=n_max / n {
                if !self.scaled(n).is_subset_of(self.scaled(n * k)).unwrap_or(false) {
                    bad.push((n, k));
                }
            }
        }
        bad
    }

    /// Pairs `(p, q)` breaking `Γ(I_p) + Γ(I_q) ⊆ Γ(I_{p+q})`, a necessary
    /// condition for gradedness.
    pub fn gradedness_violations(&self) -> Vec<(usize, usize)> {
        let n_max = self.budget();
        let unscaled = |n: usize| self.scaled(n).scale_int(n as i64).expect("positive scale");
        let mut bad = Vec::new();
        for p in 1..=n_max {
            for q in p..=n_max - p {
                let sum = unscaled(p).minkowski_sum(&unscaled(q)).expect("same dimension");
                if !sum.is_subset_of(&unscaled(p + q)).unwrap_or(false) {
                    bad.push((p, q));
                }
            }
        }
        bad
    }
}

fn scaled_prefix<Z: Int>(f: &FamilySpec<Z>, n_max: usize) -> Result<Vec<StaircasePolyhedron<Z>>> {
    (1..=n_max)
        .map(|n| {
            let g = f.gamma(n).expect("index within the prefix")?;
            g.scale(&Q::new(Z::one(), Z::from_usize(n).expect("small index")))
        })
        .collect()
}

fn stable_at<Z: Int>(scaled: &[StaircasePolyhedron<Z>], c: usize) -> bool {
    let n_max = scaled.len();
    (2..=n_max / c).all(|k| scaled[c - 1] == scaled[k * c - 1])
}

/// Computes `(1/n)Γ(I_n)` for `n ≤ N` and looks for a period.
///
/// A declared period is checked and used as is. Otherwise the smallest `c`
/// with `2c ≤ N` whose multiples all give the same scaled polyhedron wins;
/// requiring one multiple keeps a lone last member from passing vacuously.
pub fn limiting_body<Z: Int>(f: &FamilySpec<Z>, budget: usize) -> Result<LimitingBody<Z>> {
    let n_max = f.available(budget);
    if n_max == 0 {
        return Err(Error::Domain("no family members within the budget".into()));
    }
    let scaled = scaled_prefix(f, n_max)?;
    let declared = f.declared_period();
    let status = match declared {
        Some(c) if c <= n_max => {
            if stable_at(&scaled, c) {
                Stabilization::At(c)
            } else {
                return Err(Error::Domain(format!(
                    "declared period {c} contradicts the prefix: (1/c)Γ(I_c) differs from a multiple"
                )));
            }
        }
        _ => (1..=n_max / 2)
            .find(|&c| stable_at(&scaled, c))
            .map_or(Stabilization::NotUpTo(n_max), Stabilization::At),
    };
    Ok(LimitingBody {
        dim: f.dim(),
        scaled,
        status,
        declared_period: declared,
    })
}

/// Verdict on finite generation of the Rees algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NoetherianVerdict {
    /// Stabilized, and the family's rule (powers, declared period) makes it
    /// hold for every index.
    Certified,
    /// Stabilized on the prefix, rule unknown.
    ConsistentUpTo(usize),
    /// No period found on the prefix.
    NonPolyhedralUpTo(usize),
}

impl fmt::Display for NoetherianVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NoetherianVerdict::Certified => write!(f, "noetherian-certified"),
            NoetherianVerdict::ConsistentUpTo(n) => write!(f, "noetherian-consistent-up-to-{n}"),
            NoetherianVerdict::NonPolyhedralUpTo(n) => write!(f, "non-polyhedral-up-to-{n}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NoetherianReport {
    pub verdict: NoetherianVerdict,
    pub period: Option<usize>,
    /// Whether every prefix member passes the face criterion (`d = 2` only).
    pub nnd_prefix: Option<bool>,
}

pub fn noetherian_report<Z: Int>(f: &FamilySpec<Z>, budget: usize) -> Result<NoetherianReport> {
    let body = limiting_body(f, budget)?;
    noetherian_report_for(f, &body)
}

pub fn noetherian_report_for<Z: Int>(f: &FamilySpec<Z>, body: &LimitingBody<Z>) -> Result<NoetherianReport> {
    let nnd_prefix = match f {
        FamilySpec::Prefix { ideals, .. } if f.dim() == 2 => {
            let mut all = true;
            for i in ideals.iter().take(body.budget()) {
                all &= face_report(i)?.is_nnd();
            }
            Some(all)
        }
        FamilySpec::Power(i) if i.dim() == 2 => Some(face_report(i)?.is_nnd()),
        _ => None,
    };
    let verdict = match body.status {
        Stabilization::NotUpTo(n) => NoetherianVerdict::NonPolyhedralUpTo(n),
        Stabilization::At(_) if body.declared_period.is_some() => NoetherianVerdict::Certified,
        Stabilization::At(_) => NoetherianVerdict::ConsistentUpTo(body.budget()),
    };
    Ok(NoetherianReport {
        verdict,
        period: body.period(),
        nnd_prefix,
    })
}

fn pow_usize<Z: Int>(c: usize, d: usize) -> Z {
    let c = Z::from_usize(c).expect("small index");
    (0..d).fold(Z::one(), |acc, _| acc * c.clone())
}

/// `e(𝓘) = e(I_c) / c^d`.
pub fn family_multiplicity<Z: Int>(f: &FamilySpec<Z>, c: usize, cfg: &OracleConfig) -> Result<Q<Z>> {
    let e = match f {
        // e(I^c) / c^d = e(I)
        FamilySpec::Power(i) => return Ok(Q::from_integer(Z::from_u64(multiplicity(i, cfg)?).expect("fits"))),
        FamilySpec::Prefix { .. } => {
            let member = f
                .member(c)
                .ok_or_else(|| Error::Domain(format!("I_{c} is outside the prefix")))??;
            multiplicity(&member, cfg)?
        }
    };
    Ok(Q::new(Z::from_u64(e).expect("fits"), pow_usize(c, f.dim())))
}

/// Smallest multiple `kc ≤ N` of the period whose member is `m`-primary,
/// which is where [`family_multiplicity`] can be evaluated.
pub fn multiplicity_index<Z: Int>(f: &FamilySpec<Z>, body: &LimitingBody<Z>, cfg: &OracleConfig) -> Result<usize> {
    let c = body
        .period()
        .ok_or_else(|| Error::Domain("the family has not stabilized".into()))?;
    if matches!(f, FamilySpec::Power(_)) {
        return Ok(c);
    }
    let mut last = None;
    for kc in (c..=body.budget()).step_by(c) {
        let member = f.member(kc).expect("within the prefix")?;
        match crate::oracle::stable_colength(&member, cfg) {
            Ok(_) => return Ok(kc),
            Err(e @ Error::NotPrimaryOrBudget { .. }) => last = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(last.unwrap_or(Error::NotPrimaryOrBudget {
        max_degree: cfg.max_degree,
    }))
}

/// `e(𝓘)` against `d!·covol(C(𝓘))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultCovolCheck<Z: Int> {
    pub index: usize,
    pub multiplicity: Q<Z>,
    pub covolume: Q<Z>,
    pub d_factorial_covolume: Q<Z>,
    /// Compact faces of `Γ(I_c)` failing the face criterion (`d = 2`).
    pub failing_faces: Vec<CompactFace<Z>>,
}

impl<Z: Int> MultCovolCheck<Z> {
    pub fn is_equal(&self) -> bool {
        self.multiplicity == self.d_factorial_covolume
    }

    pub fn gap(&self) -> Q<Z> {
        self.multiplicity.clone() - self.d_factorial_covolume.clone()
    }
}

impl<Z: Int> fmt::Display for MultCovolCheck<Z> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "e = {}, d!covol = {}, {}",
            format_rational(&self.multiplicity),
            format_rational(&self.d_factorial_covolume),
            if self.is_equal() { "EQUAL" } else { "UNEQUAL" }
        )
    }
}

/// Compares `e(I_c)/c^d` with `d!·covol((1/c)Γ(I_c))`; equality certifies
/// that `I_c`, and with it every `I_{kc}`, is NND.
pub fn mult_equals_covol_check<Z: Int>(f: &FamilySpec<Z>, c: usize, cfg: &OracleConfig) -> Result<MultCovolCheck<Z>> {
    let d = f.dim();
    let gamma = f
        .gamma(c)
        .ok_or_else(|| Error::Domain(format!("I_{c} is outside the prefix")))??;
    let scale = Q::new(Z::one(), Z::from_usize(c).expect("small index"));
    let cov = covolume(&gamma.scale(&scale)?)?;
    let e = family_multiplicity(f, c, cfg)?;
    let dfc = cov.clone() * Q::from_integer(factorial(d));
    let failing_faces = if d == 2 && e != dfc {
        let member = match f {
            FamilySpec::Power(i) => i.clone(),
            FamilySpec::Prefix { .. } => f.member(c).expect("checked above")?,
        };
        face_report(&member)?.failing_faces().into_iter().cloned().collect()
    } else {
        Vec::new()
    };
    Ok(MultCovolCheck {
        index: c,
        multiplicity: e,
        covolume: cov,
        d_factorial_covolume: dfc,
        failing_faces,
    })
}

impl<Z: Int> fmt::Display for LimitingBody<Z> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.status {
            Stabilization::At(c) => write!(f, "stabilized at c = {c}: {}", self.scaled(c)),
            Stabilization::NotUpTo(n) => write!(f, "not stabilized up to N = {n}"),
        }
    }
}
