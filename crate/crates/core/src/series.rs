//! Ring elements and ideals as finite term lists in a fixed regular system
//! of parameters.
//!
//! An element is a polynomial representative of a power series: every
//! nonzero rational coefficient is a unit of the local ring. Dominated
//! exponents fold into the dominating monomial with a unit cofactor, which is
//! why [`LocalElement::support`] keeps only the minimal exponents.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Index};

use num_traits::{One, Signed, Zero};

use crate::error::{check_dim, Error, Result};
use crate::geometry::{hull_staircase, RationalPoint, StaircasePolyhedron};
use crate::scalar::{format_rational, Int, Q};

/// Exponent `α` of the monomial `x^α`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(entries: Vec<u32>) -> Self {
        Self(entries)
    }

    pub fn zero(dim: usize) -> Self {
        Self(vec![0; dim])
    }

    pub fn unit(dim: usize, axis: usize, power: u32) -> Self {
        let mut e = vec![0; dim];
        e[axis] = power;
        Self(e)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Componentwise `self >= other`, i.e. `x^other` divides `x^self`.
    pub fn dominates(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }

    pub fn to_point<Z: Int>(&self) -> RationalPoint<Z> {
        self.0.iter().map(|&c| crate::scalar::rat(c as i64)).collect()
    }
}

impl Add for &ExponentVector {
    type Output = ExponentVector;

    fn add(self, rhs: Self) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Index<usize> for ExponentVector {
    type Output = u32;

    fn index(&self, i: usize) -> &u32 {
        &self.0[i]
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        Self(v)
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cs: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", cs.join(","))
    }
}

/// Keeps the exponents that are minimal under the componentwise order.
pub fn minimal_exponents<'a, I>(exps: I) -> Vec<ExponentVector>
where
    I: IntoIterator<Item = &'a ExponentVector>,
{
    let mut all: Vec<&ExponentVector> = exps.into_iter().collect();
    all.sort();
    all.dedup();
    let mut out: Vec<ExponentVector> = Vec::new();
    for e in all {
        // Lexicographic order: e can only dominate an earlier exponent.
        if !out.iter().any(|m| e.dominates(m)) {
            out.push(e.clone());
        }
    }
    out
}

/// A ring element `Σ c_a x^a` with nonzero rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LocalElement<Z: Int> {
    dim: usize,
    terms: BTreeMap<ExponentVector, Q<Z>>,
}

impl<Z: Int> LocalElement<Z> {
    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(exp: ExponentVector, coeff: Q<Z>) -> Self {
        let mut e = Self::zero(exp.dim());
        if !coeff.is_zero() {
            e.terms.insert(exp, coeff);
        }
        e
    }

    pub fn constant(dim: usize, coeff: Q<Z>) -> Self {
        Self::monomial(ExponentVector::zero(dim), coeff)
    }

    /// Builds an element from `(coefficient, exponent)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I>(dim: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Q<Z>, ExponentVector)>,
    {
        let mut e = Self::zero(dim);
        for (c, a) in terms {
            check_dim(dim, a.dim())?;
            e.add_term(a, c);
        }
        Ok(e)
    }

    /// Shorthand with integer coefficients and exponents.
    pub fn from_int_terms(dim: usize, terms: &[(i64, &[u32])]) -> Result<Self> {
        Self::from_terms(
            dim,
            terms
                .iter()
                .map(|(c, a)| (crate::scalar::rat(*c), ExponentVector::new(a.to_vec()))),
        )
    }

    fn add_term(&mut self, exp: ExponentVector, coeff: Q<Z>) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp.clone()).or_insert_with(Q::zero);
        *entry = entry.clone() + coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &Q<Z>)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, exp: &ExponentVector) -> Q<Z> {
        self.terms.get(exp).cloned().unwrap_or_else(Q::zero)
    }

    /// Lowest total degree of a term (the `m`-adic order); `None` for zero.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(ExponentVector::degree).min()
    }

    /// Irredundant support: the minimal exponents among the terms.
    pub fn support(&self) -> Vec<ExponentVector> {
        minimal_exponents(self.terms.keys())
    }

    pub fn newton_polyhedron(&self) -> Result<StaircasePolyhedron<Z>> {
        let pts: Vec<RationalPoint<Z>> = self.support().iter().map(ExponentVector::to_point).collect();
        hull_staircase(&pts, self.dim)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_dim(self.dim, other.dim)?;
        let mut out = self.clone();
        for (a, c) in &other.terms {
            out.add_term(a.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        Self {
            dim: self.dim,
            terms: self.terms.iter().map(|(a, c)| (a.clone(), -c.clone())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Q<Z>) -> Self {
        if c.is_zero() {
            return Self::zero(self.dim);
        }
        Self {
            dim: self.dim,
            terms: self.terms.iter().map(|(a, v)| (a.clone(), v.clone() * c.clone())).collect(),
        }
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        check_dim(self.dim, other.dim)?;
        Ok(self.multiply_truncated(other, None))
    }

    /// Product with every term of total degree `>= bound` dropped.
    pub fn multiply_truncated(&self, other: &Self, bound: Option<u32>) -> Self {
        let mut out = Self::zero(self.dim);
        for (a, c) in &self.terms {
            for (b, e) in &other.terms {
                let s = a + b;
                if bound.is_some_and(|n| s.degree() >= n) {
                    continue;
                }
                out.add_term(s, c.clone() * e.clone());
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::constant(self.dim, Q::one());
        for _ in 0..n {
            out = out.multiply_truncated(self, None);
        }
        out
    }
}

impl<Z: Int> fmt::Display for LocalElement<Z> {
    /// Infix form with variables `x1, x2, ...`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.dim).map(|i| format!("x{i}")).collect();
        f.write_str(&self.to_infix(&names))
    }
}

impl<Z: Int> LocalElement<Z> {
    pub fn to_infix(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (a, c)) in self.terms.iter().rev().enumerate() {
            let mono: Vec<String> = a
                .entries()
                .iter()
                .zip(names)
                .filter(|(e, _)| **e > 0)
                .map(|(e, n)| if *e == 1 { n.clone() } else { format!("{n}^{e}") })
                .collect();
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if i == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            if mono.is_empty() {
                out.push_str(&format_rational(&mag));
            } else if mag.is_one() {
                out.push_str(&mono.join("*"));
            } else {
                out.push_str(&format!("{}*{}", format_rational(&mag), mono.join("*")));
            }
        }
        out
    }
}

/// `I = (g_1, ..., g_s)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealPresentation<Z: Int> {
    dim: usize,
    generators: Vec<LocalElement<Z>>,
}

impl<Z: Int> IdealPresentation<Z> {
    pub fn new(dim: usize, generators: Vec<LocalElement<Z>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Domain("dimension must be at least 1".into()));
        }
        if generators.is_empty() {
            return Err(Error::EmptyGenerator);
        }
        for g in &generators {
            check_dim(dim, g.dim())?;
        }
        Ok(Self { dim, generators })
    }

    /// Monomial ideal `(x^{a_1}, ..., x^{a_s})`.
    pub fn monomial(dim: usize, exps: &[Vec<u32>]) -> Result<Self> {
        let gens = exps
            .iter()
            .map(|a| {
                check_dim(dim, a.len())?;
                Ok(LocalElement::monomial(ExponentVector::new(a.clone()), Q::one()))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(dim, gens)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[LocalElement<Z>] {
        &self.generators
    }

    /// Union of the generator supports.
    pub fn support(&self) -> Vec<ExponentVector> {
        let all: Vec<ExponentVector> = self.generators.iter().flat_map(|g| g.support()).collect();
        minimal_exponents(all.iter())
    }

    /// `Γ(I) = conv(⋃ supp(g_i)) + R^d_{>=0}`.
    pub fn newton_polyhedron(&self) -> Result<StaircasePolyhedron<Z>> {
        let pts: Vec<RationalPoint<Z>> = self.support().iter().map(ExponentVector::to_point).collect();
        if pts.is_empty() {
            return Err(Error::EmptyGenerator);
        }
        hull_staircase(&pts, self.dim)
    }

    /// Generators `g_i h_j` of `IJ`.
    pub fn product(&self, other: &Self) -> Result<Self> {
        check_dim(self.dim, other.dim)?;
        let mut gens = Vec::with_capacity(self.generators.len() * other.generators.len());
        for g in &self.generators {
            for h in &other.generators {
                gens.push(g.multiply(h)?);
            }
        }
        Self::new(self.dim, gens)
    }

    /// Generators of `I^n`: all degree-`n` monomials in the generators.
    pub fn power(&self, n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("ideal power must be at least 1".into()));
        }
        let s = self.generators.len();
        let mut gens = Vec::new();
        // Multisets of size n as nondecreasing index sequences, sharing prefixes.
        fn rec<Z: Int>(
            gens_in: &[LocalElement<Z>],
            start: usize,
            left: u32,
            acc: LocalElement<Z>,
            out: &mut Vec<LocalElement<Z>>,
        ) {
            if left == 0 {
                out.push(acc);
                return;
            }
            for i in start..gens_in.len() {
                rec(gens_in, i, left - 1, acc.multiply_truncated(&gens_in[i], None), out);
            }
        }
        debug_assert!(s > 0);
        rec(
            &self.generators,
            0,
            n,
            LocalElement::constant(self.dim, Q::one()),
            &mut gens,
        );
        Self::new(self.dim, gens)
    }

    /// Whether every generator is a single term.
    pub fn is_monomial_presentation(&self) -> bool {
        self.generators.iter().all(|g| g.num_terms() == 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type E = LocalElement<BigInt>;

    fn el(dim: usize, terms: &[(i64, &[u32])]) -> E {
        E::from_int_terms(dim, terms).unwrap()
    }

    fn ev(v: &[u32]) -> ExponentVector {
        ExponentVector::new(v.to_vec())
    }

    #[test]
    fn support_examples() {
        let f = el(3, &[(1, &[4, 0, 0]), (1, &[2, 5, 4])]);
        assert_eq!(f.support(), vec![ev(&[2, 5, 4]), ev(&[4, 0, 0])]);
        assert!(E::zero(2).support().is_empty());
        let g = el(1, &[(1, &[2]), (5, &[3])]);
        assert_eq!(g.support(), vec![ev(&[2])]);
    }

    #[test]
    fn arithmetic() {
        let x_plus_y = el(2, &[(1, &[1, 0]), (1, &[0, 1])]);
        let x_minus_y = el(2, &[(1, &[1, 0]), (-1, &[0, 1])]);
        assert_eq!(
            x_plus_y.multiply(&x_minus_y).unwrap(),
            el(2, &[(1, &[2, 0]), (-1, &[0, 2])])
        );
        assert!(x_plus_y.add(&x_plus_y.neg()).unwrap().is_zero());
        let sq = el(2, &[(1, &[2, 0]), (1, &[0, 2])]);
        let xy = el(2, &[(1, &[1, 1])]);
        assert_eq!(sq.multiply(&xy).unwrap(), el(2, &[(1, &[3, 1]), (1, &[1, 3])]));
        assert!(matches!(sq.multiply(&E::zero(3)), Err(Error::Dimension { .. })));
        assert!(matches!(sq.add(&E::zero(1)), Err(Error::Dimension { .. })));
    }

    #[test]
    fn truncated_product() {
        let f = el(2, &[(1, &[1, 0]), (1, &[0, 3])]);
        let p = f.multiply_truncated(&f, Some(4));
        assert_eq!(p, el(2, &[(1, &[2, 0])]));
        assert_eq!(f.order(), Some(1));
        assert_eq!(E::zero(2).order(), None);
    }

    #[test]
    fn newton_polyhedron_examples() {
        // Example with support {(2,1),(1,3)}.
        let f = el(2, &[(1, &[2, 1]), (1, &[1, 3])]);
        let i = IdealPresentation::new(2, vec![f]).unwrap();
        let p = i.newton_polyhedron().unwrap();
        assert_eq!(p, StaircasePolyhedron::from_integer_points(&[vec![2, 1], vec![1, 3]]).unwrap());

        let g1 = el(3, &[(1, &[4, 0, 0]), (1, &[2, 5, 4])]);
        let g2 = el(3, &[(1, &[0, 3, 1]), (-1, &[3, 1, 2]), (1, &[1, 1, 3])]);
        let i = IdealPresentation::new(3, vec![g1, g2]).unwrap();
        let expected = StaircasePolyhedron::from_integer_points(&[
            vec![4, 0, 0],
            vec![2, 5, 4],
            vec![0, 3, 1],
            vec![3, 1, 2],
            vec![1, 1, 3],
        ])
        .unwrap();
        assert_eq!(i.newton_polyhedron().unwrap(), expected);

        let xa = IdealPresentation::<BigInt>::monomial(1, &[vec![5]]).unwrap();
        assert_eq!(xa.newton_polyhedron().unwrap().vertices(), &[vec![Q::from_integer(BigInt::from(5))]]);

        let zero = IdealPresentation::new(2, vec![E::zero(2)]).unwrap();
        assert_eq!(zero.newton_polyhedron(), Err(Error::EmptyGenerator));
        assert_eq!(IdealPresentation::<BigInt>::new(2, vec![]), Err(Error::EmptyGenerator));
    }

    #[test]
    fn powers_and_products() {
        let i = IdealPresentation::new(
            2,
            vec![el(2, &[(1, &[2, 0]), (1, &[0, 2])]), el(2, &[(1, &[1, 1])])],
        )
        .unwrap();
        let sq = i.power(2).unwrap();
        assert_eq!(sq.generators().len(), 3);
        let g = i.generators();
        assert!(sq.generators().contains(&g[0].pow(2)));
        assert!(sq.generators().contains(&g[0].multiply(&g[1]).unwrap()));
        assert!(sq.generators().contains(&g[1].pow(2)));
        assert_eq!(i.power(1).unwrap(), i);
        assert!(matches!(i.power(0), Err(Error::Domain(_))));

        // A generator with a constant term makes Γ the whole orthant.
        let unit = IdealPresentation::new(2, vec![el(2, &[(1, &[0, 0]), (1, &[1, 0])])]).unwrap();
        let prod = i.product(&unit).unwrap();
        assert_eq!(prod.generators().len(), 2);
        assert_eq!(
            unit.newton_polyhedron().unwrap(),
            StaircasePolyhedron::orthant(2).unwrap()
        );
    }

    #[test]
    fn infix_rendering() {
        let f = el(2, &[(1, &[4, 0]), (-2, &[0, 4]), (3, &[0, 0])]);
        let names = vec!["x".to_string(), "y".to_string()];
        assert_eq!(f.to_infix(&names), "x^4 - 2*y^4 + 3");
    }
}
