//! Brute-force multiplicity oracle.
//!
//! Lengths are computed in `R / m^N`, represented by the monomials of total
//! degree `< N`: the image of an ideal `I` there is spanned by the truncated
//! products `m · g`, and its codimension is `ℓ(R / (I + m^N))`. Once two
//! consecutive truncation degrees give the same value, `m^N ⊆ I` by
//! Nakayama and the value is `ℓ(R / I)`.
//!
//! Row reduction is exact and sparse. Pivots sit on the highest monomial of
//! each row, so fully reduced rows only carry the pivot plus standard
//! monomials, which keeps them short once the quotient is small.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{Int, Q};
use crate::series::{ExponentVector, IdealPresentation, LocalElement};

/// Budgets for the oracle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    /// Largest truncation degree tried by [`colength_stable`].
    pub max_degree: usize,
    /// Number of consecutive equal values required to accept a plateau.
    pub window: usize,
    /// Largest power `n` of `I` used by the finite-difference route.
    pub max_power: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            max_degree: 40,
            window: 3,
            max_power: 8,
        }
    }
}

/// Dimension data of `k[x]_{<N} / (I + m^N)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TruncatedQuotient {
    pub dim: usize,
    pub degree: usize,
    pub basis_size: usize,
    pub span_dim: usize,
}

impl TruncatedQuotient {
    pub fn colength(&self) -> u64 {
        (self.basis_size - self.span_dim) as u64
    }
}

/// Monomials of total degree `< N`, ordered by degree then lexicographically.
struct MonomialBasis {
    bound: u32,
    index: HashMap<ExponentVector, usize>,
    monomials: Vec<ExponentVector>,
}

impl MonomialBasis {
    fn new(dim: usize, bound: u32) -> Self {
        let mut monomials = Vec::new();
        for deg in 0..bound {
            let mut cur = vec![0u32; dim];
            fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<ExponentVector>) {
                if i + 1 == cur.len() {
                    cur[i] = left;
                    out.push(ExponentVector::new(cur.clone()));
                    return;
                }
                for k in (0..=left).rev() {
                    cur[i] = k;
                    rec(i + 1, left - k, cur, out);
                }
            }
            rec(0, deg, &mut cur, &mut monomials);
        }
        let index = monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        Self {
            bound,
            index,
            monomials,
        }
    }

    fn len(&self) -> usize {
        self.monomials.len()
    }

    /// Row of `shift · g` with terms of degree `>= N` dropped.
    fn shifted_row<Z: Int>(&self, g: &LocalElement<Z>, shift: &ExponentVector) -> SparseRow<Z> {
        let mut row = SparseRow::new();
        for (a, c) in g.terms() {
            let e = a + shift;
            if e.degree() < self.bound {
                row.insert(self.index[&e], c.clone());
            }
        }
        row
    }
}

type SparseRow<Z> = BTreeMap<usize, Q<Z>>;

/// Fully reduced echelon basis of a subspace, keyed by pivot column.
struct SparseEchelon<Z: Int> {
    rows: HashMap<usize, SparseRow<Z>>,
}

impl<Z: Int> SparseEchelon<Z> {
    fn new() -> Self {
        Self { rows: HashMap::new() }
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Adds a vector to the span; returns whether the rank grew.
    fn insert(&mut self, mut row: SparseRow<Z>) -> bool {
        let hits: Vec<(usize, Q<Z>)> = row
            .iter()
            .filter(|(c, _)| self.rows.contains_key(c))
            .map(|(c, v)| (*c, v.clone()))
            .collect();
        // Stored rows only touch their own pivot and free columns, so one
        // pass over the pivot hits clears every pivot column.
        for (col, coeff) in hits {
            axpy(&mut row, &(-coeff), &self.rows[&col]);
        }
        let Some((&pivot, lead)) = row.iter().next_back() else {
            return false;
        };
        let inv = Q::<Z>::one() / lead.clone();
        for v in row.values_mut() {
            *v = v.clone() * inv.clone();
        }
        for other in self.rows.values_mut() {
            if let Some(f) = other.get(&pivot).cloned() {
                axpy(other, &(-f), &row);
            }
        }
        self.rows.insert(pivot, row);
        true
    }

    fn basis(&self) -> impl Iterator<Item = &SparseRow<Z>> {
        self.rows.values()
    }
}

/// `target += factor · source`, dropping cancelled entries.
fn axpy<Z: Int>(target: &mut SparseRow<Z>, factor: &Q<Z>, source: &SparseRow<Z>) {
    for (c, v) in source {
        let delta = factor.clone() * v.clone();
        match target.get_mut(c) {
            Some(t) => {
                *t = t.clone() + delta;
                if t.is_zero() {
                    target.remove(c);
                }
            }
            None => {
                target.insert(*c, delta);
            }
        }
    }
}

fn nonzero_generators<Z: Int>(ideal: &IdealPresentation<Z>) -> Vec<&LocalElement<Z>> {
    ideal.generators().iter().filter(|g| !g.is_zero()).collect()
}

/// Span of `(I + m^N) / m^N` inside the truncated basis.
fn ideal_span<Z: Int>(ideal: &IdealPresentation<Z>, basis: &MonomialBasis) -> SparseEchelon<Z> {
    let mut span = SparseEchelon::new();
    let gens = nonzero_generators(ideal);
    // High-degree shifts first: their rows are nearly monomial after
    // truncation and fix the top pivots cheaply.
    for shift in basis.monomials.iter().rev() {
        for g in &gens {
            let order = g.order().expect("nonzero");
            if shift.degree() + order >= basis.bound {
                continue;
            }
            let row = basis.shifted_row(g, shift);
            if !row.is_empty() {
                span.insert(row);
            }
        }
    }
    span
}

/// `ℓ(R / (I + m^N))` with its dimension data.
pub fn truncated_quotient<Z: Int>(ideal: &IdealPresentation<Z>, degree: usize) -> Result<TruncatedQuotient> {
    if degree == 0 {
        return Err(Error::Domain("truncation degree must be at least 1".into()));
    }
    let basis = MonomialBasis::new(ideal.dim(), degree as u32);
    let span = ideal_span(ideal, &basis);
    Ok(TruncatedQuotient {
        dim: ideal.dim(),
        degree,
        basis_size: basis.len(),
        span_dim: span.rank(),
    })
}

/// Dimension of `k[x]_{<N}` modulo the truncated ideal.
pub fn colength_truncated<Z: Int>(ideal: &IdealPresentation<Z>, degree: usize) -> Result<u64> {
    Ok(truncated_quotient(ideal, degree)?.colength())
}

/// Stable colength `ℓ(R/I)` and the first truncation degree `N` of the
/// plateau; `m^N ⊆ I` holds for that `N`.
pub fn stable_colength<Z: Int>(ideal: &IdealPresentation<Z>, cfg: &OracleConfig) -> Result<(u64, usize)> {
    // Γ(I) missing an axis means no pure power lies in I.
    let gamma = match ideal.newton_polyhedron() {
        Ok(p) => p,
        Err(Error::EmptyGenerator) => return Err(Error::NotPrimaryOrBudget { max_degree: 0 }),
        Err(e) => return Err(e),
    };
    if crate::geometry::check_cofinite(&gamma).is_err() {
        return Err(Error::NotPrimaryOrBudget {
            max_degree: cfg.max_degree,
        });
    }
    let window = cfg.window.max(2);
    let mut values: Vec<u64> = Vec::new();
    for n in 1..=cfg.max_degree {
        values.push(colength_truncated(ideal, n)?);
        if values.len() >= window {
            let tail = &values[values.len() - window..];
            if tail.iter().all(|v| *v == tail[0]) {
                return Ok((tail[0], n + 1 - window));
            }
        }
    }
    Err(Error::NotPrimaryOrBudget {
        max_degree: cfg.max_degree,
    })
}

/// `ℓ(R/I)` for an `m`-primary ideal.
pub fn colength_stable<Z: Int>(ideal: &IdealPresentation<Z>, cfg: &OracleConfig) -> Result<u64> {
    Ok(stable_colength(ideal, cfg)?.0)
}

/// `ℓ(R/I^n)` for `n = 0..=max_power`, given `m^k ⊆ I`.
///
/// Works in `R / m^N` with `N = max_power · k`, which contains every power
/// in the range; `I^n` is spanned by `g_i · b` over a basis `b` of `I^{n-1}`.
pub fn power_colengths<Z: Int>(ideal: &IdealPresentation<Z>, contains_power: usize, max_power: usize) -> Vec<u64> {
    let bound = (max_power * contains_power).max(1) as u32;
    let basis = MonomialBasis::new(ideal.dim(), bound);
    let gens = nonzero_generators(ideal);
    let mut values = vec![0u64];
    let mut span = ideal_span(ideal, &basis);
    values.push((basis.len() - span.rank()) as u64);
    for _ in 2..=max_power {
        let mut next = SparseEchelon::new();
        for b in span.basis() {
            for g in &gens {
                let mut row = SparseRow::new();
                for (col, v) in b {
                    let shifted = basis.shifted_row(g, &basis.monomials[*col]);
                    axpy(&mut row, v, &shifted);
                }
                if !row.is_empty() {
                    next.insert(row);
                }
            }
        }
        span = next;
        values.push((basis.len() - span.rank()) as u64);
    }
    values
}

fn binomial(n: usize, k: usize) -> i128 {
    (0..k).fold(1i128, |acc, i| acc * (n - i) as i128 / (i + 1) as i128)
}

/// d-th forward differences of a sequence.
pub fn finite_differences(values: &[u64], order: usize) -> Vec<i128> {
    if values.len() <= order {
        return Vec::new();
    }
    (0..values.len() - order)
        .map(|n| {
            (0..=order)
                .map(|k| {
                    let sign = if (order - k) % 2 == 0 { 1 } else { -1 };
                    sign * binomial(order, k) * values[n + k] as i128
                })
                .sum()
        })
        .collect()
}

/// Hilbert–Samuel multiplicity `e(I)` of an `m`-primary ideal.
///
/// With `d` generators the ideal is a parameter ideal and `e(I) = ℓ(R/I)`.
/// Otherwise `ℓ(R/I^n)` is eventually a polynomial of degree `d` with
/// leading coefficient `e/d!`, so its `d`-th difference settles at `e`.
pub fn multiplicity<Z: Int>(ideal: &IdealPresentation<Z>, cfg: &OracleConfig) -> Result<u64> {
    let (colength, k) = stable_colength(ideal, cfg)?;
    let d = ideal.dim();
    if nonzero_generators(ideal).len() == d {
        return Ok(colength);
    }
    let window = cfg.window.max(1);
    let needed = d + window - 1;
    let mut tries = vec![needed.min(cfg.max_power)];
    if needed < cfg.max_power {
        tries.push(cfg.max_power);
    }
    for top in tries {
        let values = power_colengths(ideal, k, top);
        let diffs = finite_differences(&values, d);
        for start in 0..diffs.len().saturating_sub(window - 1) {
            let w = &diffs[start..start + window];
            if w.iter().all(|v| *v == w[0]) && w[0] > 0 {
                return Ok(w[0] as u64);
            }
        }
    }
    Err(Error::BudgetExceeded {
        max_power: cfg.max_power,
    })
}

/// `ℓ(R/I^n)` for `n = 0..=max_power`.
pub fn hilbert_samuel_values<Z: Int>(
    ideal: &IdealPresentation<Z>,
    max_power: usize,
    cfg: &OracleConfig,
) -> Result<Vec<u64>> {
    let (_, k) = stable_colength(ideal, cfg)?;
    Ok(power_colengths(ideal, k, max_power))
}
