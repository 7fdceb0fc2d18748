//! Dense univariate polynomials over exact rationals.

use std::fmt;

use num_traits::{One, Zero};

use crate::scalar::{format_rational, Int, Q};

/// `Σ c_k t^k`, trailing zeros trimmed; the zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UPoly<Z: Int> {
    coeffs: Vec<Q<Z>>,
}

impl<Z: Int> UPoly<Z> {
    pub fn new(mut coeffs: Vec<Q<Z>>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| crate::scalar::rat(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Q<Z>] {
        &self.coeffs
    }

    fn lead(&self) -> Option<&Q<Z>> {
        self.coeffs.last()
    }

    pub fn monic(&self) -> Self {
        match self.lead() {
            None => Self::zero(),
            Some(l) => {
                let inv = Q::<Z>::one() / l.clone();
                Self::new(self.coeffs.iter().map(|c| c.clone() * inv.clone()).collect())
            }
        }
    }

    /// Divides out the largest power of `t`.
    pub fn strip_t_powers(&self) -> Self {
        let k = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        Self::new(self.coeffs[k..].to_vec())
    }

    /// Remainder of Euclidean division by a nonzero `divisor`.
    pub fn rem(&self, divisor: &Self) -> Self {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.lead().expect("nonzero").clone();
        let mut r = self.coeffs.clone();
        while r.len() > dd && !r.is_empty() {
            let top = r.len() - 1;
            let f = r[top].clone() / lead.clone();
            if !f.is_zero() {
                for (i, c) in divisor.coeffs.iter().enumerate() {
                    let idx = top - dd + i;
                    r[idx] = r[idx].clone() - f.clone() * c.clone();
                }
            }
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        Self::new(r)
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn eval(&self, t: &Q<Z>) -> Q<Z> {
        self.coeffs
            .iter()
            .rev()
            .fold(Q::zero(), |acc, c| acc * t.clone() + c.clone())
    }
}

impl<Z: Int> fmt::Display for UPoly<Z> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                let power = match k {
                    0 => return format_rational(c),
                    1 => "t".to_string(),
                    _ => format!("t^{k}"),
                };
                if c.is_one() {
                    power
                } else if (-c.clone()).is_one() {
                    format!("-{power}")
                } else {
                    format!("{}*{power}", format_rational(c))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = UPoly<i64>;

    #[test]
    fn gcd_examples() {
        let a = P::from_ints(&[1, 1]); // 1 + t
        let b = P::from_ints(&[1, -1]);
        assert_eq!(a.gcd(&b), P::from_ints(&[1]));
        let c = P::from_ints(&[-1, 0, 1]); // t^2 - 1
        assert_eq!(a.gcd(&c), P::from_ints(&[1, 1]));
        assert_eq!(P::from_ints(&[1, 0, 0, 1]).gcd(&P::from_ints(&[0, 1])), P::from_ints(&[1]));
        assert_eq!(P::zero().gcd(&P::zero()), P::zero());
        assert_eq!(P::zero().gcd(&c), c);
    }

    #[test]
    fn strip_and_eval() {
        let p = P::from_ints(&[0, 0, 1, 1]);
        assert_eq!(p.strip_t_powers(), P::from_ints(&[1, 1]));
        assert_eq!(p.eval(&crate::scalar::rat(-1)), crate::scalar::rat(0));
        assert_eq!(p.degree(), Some(3));
        assert_eq!(P::from_ints(&[0, 0]).degree(), None);
    }

    #[test]
    fn display() {
        assert_eq!(P::from_ints(&[1, 0, 0, 1]).to_string(), "1 + t^3");
        assert_eq!(P::from_ints(&[0, -1, 3]).to_string(), "-t + 3*t^2");
        assert_eq!(P::zero().to_string(), "0");
    }

    #[test]
    fn rem_matches_long_division() {
        // t^3 + 2t + 5 = (t - 1)(t^2 + t + 3) + 8
        let r = P::from_ints(&[5, 2, 0, 1]).rem(&P::from_ints(&[-1, 1]));
        assert_eq!(r, P::from_ints(&[8]));
    }
}
