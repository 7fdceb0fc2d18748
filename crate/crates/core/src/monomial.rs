//! Monomial ideals as staircases of minimal generator exponents.

use std::fmt;

use num_traits::Zero;

use crate::error::{check_dim, Error, Result};
use crate::geometry::{hull_staircase, RationalPoint, StaircasePolyhedron};
use crate::scalar::{ceil_int, Int, Q};
use crate::series::{minimal_exponents, ExponentVector, IdealPresentation, LocalElement};

/// Monomial ideal given by its minimal generators (an antichain, sorted).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    dim: usize,
    generators: Vec<ExponentVector>,
}

impl MonomialIdeal {
    /// Minimizes the given exponents into an antichain.
    pub fn new(dim: usize, exps: Vec<ExponentVector>) -> Result<Self> {
        if exps.is_empty() {
            return Err(Error::EmptyGenerator);
        }
        for e in &exps {
            check_dim(dim, e.dim())?;
        }
        Ok(Self {
            dim,
            generators: minimal_exponents(exps.iter()),
        })
    }

    pub fn from_exponents(dim: usize, exps: &[Vec<u32>]) -> Result<Self> {
        Self::new(dim, exps.iter().cloned().map(ExponentVector::new).collect())
    }

    /// `m^n = (x_1, ..., x_d)^n`.
    pub fn maximal_power(dim: usize, n: u32) -> Self {
        let mut exps = Vec::new();
        let mut cur = vec![0u32; dim];
        fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<ExponentVector>) {
            if i + 1 == cur.len() {
                cur[i] = left;
                out.push(ExponentVector::new(cur.clone()));
                return;
            }
            for k in 0..=left {
                cur[i] = k;
                rec(i + 1, left - k, cur, out);
            }
        }
        rec(0, n, &mut cur, &mut exps);
        Self::new(dim, exps).expect("nonempty")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[ExponentVector] {
        &self.generators
    }

    /// `x^a ∈ M` iff `a` dominates a minimal generator.
    pub fn contains(&self, a: &ExponentVector) -> bool {
        self.generators.iter().any(|g| a.dominates(g))
    }

    /// `NP(M)`: hull of the generator exponents plus the orthant.
    pub fn newton_polyhedron<Z: Int>(&self) -> StaircasePolyhedron<Z> {
        let pts: Vec<RationalPoint<Z>> = self.generators.iter().map(ExponentVector::to_point).collect();
        hull_staircase(&pts, self.dim).expect("monomial ideal has generators")
    }

    pub fn to_presentation<Z: Int>(&self) -> IdealPresentation<Z> {
        let gens = self
            .generators
            .iter()
            .map(|a| LocalElement::monomial(a.clone(), Q::from_integer(Z::one())))
            .collect();
        IdealPresentation::new(self.dim, gens).expect("monomial ideal has generators")
    }

    /// Integral closure: the monomials whose exponents lie in `NP(M)`.
    pub fn integral_closure(&self) -> Self {
        ideal_i0::<num_bigint::BigInt>(&self.newton_polyhedron())
    }

    /// Each variable has a pure power in the ideal.
    pub fn is_m_primary(&self) -> bool {
        (0..self.dim).all(|i| self.pure_power(i).is_some())
    }

    fn pure_power(&self, axis: usize) -> Option<u32> {
        self.generators
            .iter()
            .filter(|g| g.entries().iter().enumerate().all(|(j, &e)| j == axis || e == 0))
            .map(|g| g[axis])
            .min()
    }

    /// Number of standard monomials (those outside the ideal).
    pub fn colength(&self) -> Result<u64> {
        let mut bounds = Vec::with_capacity(self.dim);
        for axis in 0..self.dim {
            bounds.push(self.pure_power(axis).ok_or(Error::NotPrimary { axis })?);
        }
        let mut count = 0u64;
        for_each_in_box(&bounds, |a| {
            if !self.contains(&ExponentVector::new(a.to_vec())) {
                count += 1;
            }
        });
        Ok(count)
    }

    pub fn product(&self, other: &Self) -> Result<Self> {
        check_dim(self.dim, other.dim)?;
        let mut exps = Vec::new();
        for a in &self.generators {
            for b in &other.generators {
                exps.push(a + b);
            }
        }
        Self::new(self.dim, exps)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gs: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        write!(f, "<{}>", gs.join(", "))
    }
}

/// Calls `f` on every point of `[0, b_0] × ... × [0, b_{d-1}]`.
fn for_each_in_box(bounds: &[u32], mut f: impl FnMut(&[u32])) {
    let mut cur = vec![0u32; bounds.len()];
    loop {
        f(&cur);
        let mut i = 0;
        loop {
            if i == bounds.len() {
                return;
            }
            if cur[i] < bounds[i] {
                cur[i] += 1;
                break;
            }
            cur[i] = 0;
            i += 1;
        }
    }
}

/// `I_0`: the monomial ideal generated by the lattice points of `P`.
///
/// Minimal lattice points of `P` are bounded coordinatewise by the rounded-up
/// vertex maxima, so the scan walks that box over the first `d - 1`
/// coordinates and reads the smallest feasible last coordinate off the facets.
pub fn ideal_i0<Z: Int>(p: &StaircasePolyhedron<Z>) -> MonomialIdeal {
    let d = p.dim();
    let mut bounds: Vec<u32> = vec![0; d];
    for v in p.vertices() {
        for (b, c) in bounds.iter_mut().zip(v) {
            let c = ceil_int(c).to_u32().expect("vertex coordinate fits in u32");
            *b = (*b).max(c);
        }
    }
    let last = d - 1;
    let mut points: Vec<ExponentVector> = Vec::new();
    for_each_in_box(&bounds[..last], |prefix| {
        let prefix_q: Vec<Q<Z>> = prefix.iter().map(|&c| crate::scalar::rat(c as i64)).collect();
        let mut lowest = Q::<Z>::zero();
        for f in p.facets() {
            let partial = f.normal[..last]
                .iter()
                .zip(&prefix_q)
                .fold(Q::<Z>::zero(), |acc, (n, x)| acc + x.clone() * n.clone());
            let gap = f.level.clone() - partial;
            if f.normal[last].is_zero() {
                if gap > Q::zero() {
                    return;
                }
            } else {
                let need = gap / Q::from_integer(f.normal[last].clone());
                if need > lowest {
                    lowest = need;
                }
            }
        }
        let y = ceil_int(&lowest).to_u32().expect("coordinate fits in u32");
        if y <= bounds[last] {
            let mut e = prefix.to_vec();
            e.push(y);
            points.push(ExponentVector::new(e));
        }
    });
    MonomialIdeal::new(d, points).expect("a staircase always contains lattice points")
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type P = StaircasePolyhedron<BigInt>;

    fn hull(v: &[&[i64]]) -> P {
        P::from_integer_points(&v.iter().map(|p| p.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn mono(dim: usize, v: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(dim, &v.iter().map(|p| p.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    /// Brute force: minimal lattice points of P inside [0, m]^2.
    fn brute_i0(p: &P, m: u32) -> MonomialIdeal {
        let mut pts = Vec::new();
        for a in 0..=m {
            for b in 0..=m {
                let x: Vec<Q<BigInt>> = vec![Q::from_integer(a.into()), Q::from_integer(b.into())];
                if p.contains(&x).unwrap() {
                    pts.push(ExponentVector::new(vec![a, b]));
                }
            }
        }
        MonomialIdeal::new(2, pts).unwrap()
    }

    #[test]
    fn i0_examples() {
        assert_eq!(ideal_i0(&hull(&[&[2, 0], &[1, 1], &[0, 2]])), mono(2, &[&[2, 0], &[1, 1], &[0, 2]]));
        let p = hull(&[&[4, 0], &[2, 1], &[1, 2], &[0, 4]]);
        assert_eq!(ideal_i0(&p), brute_i0(&p, 4));
        assert_eq!(ideal_i0(&p), mono(2, &[&[4, 0], &[2, 1], &[1, 2], &[0, 4]]));
        assert_eq!(ideal_i0(&hull(&[&[1, 1], &[0, 2]])), mono(2, &[&[1, 1], &[0, 2]]));
        // Rational vertices.
        let half = hull(&[&[3, 0], &[0, 3]]).scale(&Q::new(BigInt::from(1), BigInt::from(2))).unwrap();
        assert_eq!(ideal_i0(&half), mono(2, &[&[2, 0], &[1, 1], &[0, 2]]));
        assert_eq!(ideal_i0(&hull(&[&[1, 1]])), mono(2, &[&[1, 1]]));
    }

    #[test]
    fn closure_examples() {
        assert_eq!(mono(2, &[&[3, 0], &[0, 3]]).integral_closure(), MonomialIdeal::maximal_power(2, 3));
        for m in 1..5 {
            let mm = MonomialIdeal::maximal_power(2, m);
            assert_eq!(mm.integral_closure(), mm);
        }
        assert_eq!(mono(2, &[&[2, 0], &[0, 3]]).integral_closure(), mono(2, &[&[2, 0], &[1, 2], &[0, 3]]));
        let three = mono(3, &[&[2, 0, 0], &[0, 2, 0], &[0, 0, 2]]);
        assert_eq!(three.integral_closure(), MonomialIdeal::maximal_power(3, 2));
    }

    #[test]
    fn colength_examples() {
        assert_eq!(MonomialIdeal::maximal_power(2, 2).colength().unwrap(), 3);
        assert_eq!(MonomialIdeal::maximal_power(2, 3).colength().unwrap(), 6);
        let m = mono(2, &[&[4, 0], &[2, 1], &[1, 2], &[0, 4]]);
        // Standard monomials: (0..3,0), (0,1),(1,1), (0,2),(0,3).
        assert_eq!(m.colength().unwrap(), 8);
        assert_eq!(mono(2, &[&[1, 1]]).colength(), Err(Error::NotPrimary { axis: 0 }));
    }

    #[test]
    fn primary_checks() {
        assert!(mono(2, &[&[2, 0], &[0, 3]]).is_m_primary());
        assert!(!mono(2, &[&[1, 1]]).is_m_primary());
        assert!(!mono(3, &[&[1, 0, 0], &[0, 2, 1], &[0, 0, 3]]).is_m_primary());
    }

    #[test]
    fn antichain_and_membership() {
        let m = mono(2, &[&[2, 0], &[3, 1], &[0, 2]]);
        assert_eq!(m.generators().len(), 2);
        assert!(m.contains(&ExponentVector::new(vec![5, 0])));
        assert!(!m.contains(&ExponentVector::new(vec![1, 1])));
    }
}
