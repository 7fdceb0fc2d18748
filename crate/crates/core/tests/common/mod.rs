//! Seeded random ideals shared by the property and acceptance suites.
#![allow(dead_code)]

use newtonpoly::series::{ExponentVector, LocalElement};
use newtonpoly::{Element, Ideal, Monomials, Q};
use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;
pub type Rng8 = ChaCha8Rng;

pub fn el(terms: &[(i64, &[u32])]) -> Element {
    LocalElement::from_int_terms(terms[0].1.len(), terms).unwrap()
}

pub fn ideal(gens: Vec<Element>) -> Ideal {
    Ideal::new(gens[0].dim(), gens).unwrap()
}

/// `(x^m + y^m, x^i y^{m-i} for 0 < i < m)`.
pub fn j(m: u32) -> Ideal {
    let mut gens = vec![el(&[(1, &[m, 0]), (1, &[0, m])])];
    for i in 1..m {
        gens.push(el(&[(1, &[i, m - i])]));
    }
    ideal(gens)
}

fn random_exponent(rng: &mut Rng8) -> Vec<u32> {
    let deg = rng.gen_range(1..=6u32);
    let a = rng.gen_range(0..=deg);
    vec![a, deg - a]
}

fn random_element(rng: &mut Rng8) -> Element {
    loop {
        let n = rng.gen_range(1..=3);
        let terms = (0..n).map(|_| {
            let c = *[1i64, -1, 2, -2, 3].choose(rng).unwrap();
            (Q::from_integer(BigInt::from(c)), ExponentVector::new(random_exponent(rng)))
        });
        let e = LocalElement::from_terms(2, terms).unwrap();
        if !e.is_zero() {
            return e;
        }
    }
}

/// An ideal in `d = 2` with at most three generators of degree at most six.
///
/// Half of the draws pin a pure power of `x` and of `y` into the first two
/// generators so that a good share of the corpus is `m`-primary.
pub fn random_ideal(rng: &mut Rng8) -> Ideal {
    let s = rng.gen_range(1..=3);
    let pin = s >= 2 && rng.gen_bool(0.5);
    let gens = (0..s)
        .map(|i| {
            let g = random_element(rng);
            if pin && i < 2 {
                let mut e = vec![0, 0];
                e[i] = rng.gen_range(1..=6);
                let c = *[1i64, -1, 2].choose(rng).unwrap();
                let t = LocalElement::monomial(ExponentVector::new(e), Q::from_integer(BigInt::from(c)));
                let sum = g.add(&t).unwrap();
                if sum.is_zero() { t } else { sum }
            } else {
                g
            }
        })
        .collect();
    ideal(gens)
}

pub fn corpus(n: usize, seed: u64) -> Vec<Ideal> {
    let mut rng = Rng8::seed_from_u64(seed);
    (0..n).map(|_| random_ideal(&mut rng)).collect()
}

/// An `m`-primary monomial ideal: `x^a`, `y^b` and up to three mixed monomials.
pub fn random_monomial_ideal(rng: &mut Rng8) -> Monomials {
    let mut exps = vec![vec![rng.gen_range(1..=6), 0], vec![0, rng.gen_range(1..=6)]];
    for _ in 0..rng.gen_range(0..=3) {
        exps.push(vec![rng.gen_range(1..=5), rng.gen_range(1..=5)]);
    }
    Monomials::from_exponents(2, &exps).unwrap()
}
