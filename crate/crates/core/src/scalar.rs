//! Scalar abstraction.
//!
//! All geometry and linear algebra runs over `Ratio<Z>` for an integer type
//! `Z`. Arbitrary precision (`BigInt`) is the default used by the crate-root
//! aliases; fixed-width `i64`/`i128` work for small inputs but panic on
//! overflow in debug builds.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// Backing integer type for exact rationals.
pub trait Int:
    Integer + Signed + Clone + Hash + Debug + Display + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
}

impl<T> Int for T where
    T: Integer + Signed + Clone + Hash + Debug + Display + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
}

/// Exact rational over `Z`.
pub type Q<Z> = Ratio<Z>;

pub(crate) fn int<Z: Int>(v: i64) -> Z {
    Z::from_i64(v).expect("integer out of range for scalar type")
}

pub(crate) fn rat<Z: Int>(v: i64) -> Q<Z> {
    Ratio::from_integer(int(v))
}

/// Smallest integer `>= q`.
pub(crate) fn ceil_int<Z: Int>(q: &Q<Z>) -> Z {
    q.ceil().to_integer()
}

/// Formats a rational as `p/q`, or `p` when integral.
pub fn format_rational<Z: Int>(q: &Q<Z>) -> String {
    if q.is_integer() {
        format!("{}", q.numer())
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `p`, `-p` or `p/q` (no decimals).
pub fn parse_rational<Z: Int>(s: &str) -> Option<Q<Z>> {
    let s = s.trim();
    let parse_int = |t: &str| -> Option<Z> {
        let t = t.trim();
        if t.is_empty() || t.contains('.') {
            return None;
        }
        Z::from_str_radix(t, 10).ok()
    };
    match s.split_once('/') {
        Some((p, q)) => {
            let q = parse_int(q)?;
            if q.is_zero() {
                return None;
            }
            Some(Ratio::new(parse_int(p)?, q))
        }
        None => Some(Ratio::from_integer(parse_int(s)?)),
    }
}

/// Lowest common multiple of the denominators, gcd of numerators: returns
/// the primitive integer vector parallel to `v` (same direction). Zero
/// vectors are returned unchanged.
pub(crate) fn primitive_direction<Z: Int>(v: &[Q<Z>]) -> Vec<Z> {
    let mut l = Z::one();
    for x in v {
        l = l.lcm(x.denom());
    }
    let scaled: Vec<Z> = v
        .iter()
        .map(|x| x.numer().clone() * (l.clone() / x.denom().clone()))
        .collect();
    let mut g = Z::zero();
    for x in &scaled {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return scaled;
    }
    scaled.into_iter().map(|x| x / g.clone()).collect()
}
