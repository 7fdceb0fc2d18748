mod common;

use common::*;
use newtonpoly::family::{limiting_body, noetherian_report, NoetherianVerdict, Stabilization};
use newtonpoly::geometry::{covolume, covolume_in_box, default_box_side, hull_staircase, polytope_volume};
use newtonpoly::monomial::ideal_i0;
use newtonpoly::oracle::{multiplicity, OracleConfig};
use newtonpoly::{Family, Ideal, Monomials, Polyhedron, Rational};
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

fn points(dim: usize, max: i64) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(0..=max, dim), 1..6)
}

/// Points plus a pure power on every axis, so the complement is bounded.
fn cofinite(dim: usize, max: i64) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (points(dim, max), prop::collection::vec(1..=max, dim)).prop_map(move |(mut pts, axes)| {
        for (i, a) in axes.into_iter().enumerate() {
            let mut e = vec![0; dim];
            e[i] = a;
            pts.push(e);
        }
        pts
    })
}

fn poly(pts: &[Vec<i64>]) -> Polyhedron {
    Polyhedron::from_integer_points(pts).unwrap()
}

fn monomials(pts: &[Vec<i64>]) -> Monomials {
    let exps: Vec<Vec<u32>> = pts.iter().map(|p| p.iter().map(|&c| c as u32).collect()).collect();
    Monomials::from_exponents(pts[0].len(), &exps).unwrap()
}

/// Area under the boundary chain of a cofinite staircase in the plane.
fn trapezoids(p: &Polyhedron) -> Rational {
    let v = p.vertices();
    let mut area = Rational::zero();
    for w in v.windows(2) {
        area += (w[1][0].clone() - w[0][0].clone()) * (w[0][1].clone() + w[1][1].clone()) / q(2, 1);
    }
    area
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn minkowski_sum_is_commutative_and_associative(
        a in points(2, 6), b in points(2, 6), c in points(2, 6),
    ) {
        let (a, b, c) = (poly(&a), poly(&b), poly(&c));
        prop_assert_eq!(a.minkowski_sum(&b).unwrap(), b.minkowski_sum(&a).unwrap());
        prop_assert_eq!(
            a.minkowski_sum(&b).unwrap().minkowski_sum(&c).unwrap(),
            a.minkowski_sum(&b.minkowski_sum(&c).unwrap()).unwrap()
        );
    }

    #[test]
    fn doubling(a in points(3, 4)) {
        let p = poly(&a);
        prop_assert_eq!(p.minkowski_sum(&p).unwrap(), p.scale_int(2).unwrap());
    }

    #[test]
    fn hull_is_idempotent(a in points(3, 5)) {
        let p = poly(&a);
        prop_assert_eq!(hull_staircase(p.vertices(), 3).unwrap(), p);
    }

    #[test]
    fn covolume_scales_by_r_to_the_d(a in cofinite(2, 6), b in cofinite(3, 3), r in 1i64..4, s in 1i64..3) {
        let r = q(r, s);
        for p in [poly(&a), poly(&b)] {
            let d = p.dim() as i32;
            let scaled = covolume(&p.scale(&r).unwrap()).unwrap();
            prop_assert_eq!(scaled, covolume(&p).unwrap() * num_traits::pow(r.clone(), d as usize));
        }
    }

    #[test]
    fn covolume_is_antitone(a in cofinite(2, 6), extra in points(2, 6)) {
        let p = poly(&a);
        let bigger = poly(&[a.clone(), extra].concat());
        prop_assert!(p.is_subset_of(&bigger).unwrap());
        prop_assert!(covolume(&bigger).unwrap() <= covolume(&p).unwrap());
    }

    #[test]
    fn covolume_ignores_the_box(a in cofinite(3, 4), extra in 0i64..4) {
        let p = poly(&a);
        let side = default_box_side(&p) + BigInt::from(extra);
        prop_assert_eq!(covolume_in_box(&p, &side).unwrap(), covolume(&p).unwrap());
    }

    #[test]
    fn planar_covolume_matches_trapezoids(a in cofinite(2, 8)) {
        let p = poly(&a);
        prop_assert_eq!(covolume(&p).unwrap(), trapezoids(&p));
        // P cut down to the box spanned by its axis intercepts is convex.
        let (w, h) = (p.axis_intercept(0).unwrap(), p.axis_intercept(1).unwrap());
        let mut region = p.vertices().to_vec();
        region.push(vec![w.clone(), h.clone()]);
        prop_assert_eq!(polytope_volume(&region, 2), w * h - trapezoids(&p));
    }

    #[test]
    fn gamma_of_a_monomial_ideal_is_its_newton_polyhedron(a in points(2, 6)) {
        let m = monomials(&a);
        let presentation: Ideal = m.to_presentation();
        prop_assert_eq!(presentation.newton_polyhedron().unwrap(), m.newton_polyhedron::<BigInt>());
    }

    #[test]
    fn closure_is_extensive_and_idempotent(a in points(2, 6)) {
        let m = monomials(&a);
        let bar = m.integral_closure();
        prop_assert!(m.generators().iter().all(|g| bar.contains(g)));
        prop_assert_eq!(bar.integral_closure(), bar.clone());
        prop_assert_eq!(bar.newton_polyhedron::<BigInt>(), m.newton_polyhedron::<BigInt>());
    }

    #[test]
    fn i0_of_gamma_has_the_same_gamma(seed in any::<u64>()) {
        let i = random_ideal(&mut Rng8::seed_from_u64(seed));
        let gamma = i.newton_polyhedron().unwrap();
        let i0 = ideal_i0(&gamma);
        prop_assert_eq!(i0.newton_polyhedron::<BigInt>(), gamma);
    }

    #[test]
    fn support_laws(seed in any::<u64>()) {
        let mut rng = Rng8::seed_from_u64(seed);
        let (i, j) = (random_ideal(&mut rng), random_ideal(&mut rng));
        let gi = i.newton_polyhedron().unwrap();
        let gj = j.newton_polyhedron().unwrap();
        prop_assert_eq!(i.product(&j).unwrap().newton_polyhedron().unwrap(), gi.minkowski_sum(&gj).unwrap());
        prop_assert_eq!(i.power(2).unwrap().newton_polyhedron().unwrap(), gi.scale_int(2).unwrap());
        // Γ only depends on the minimal exponents.
        let m = Monomials::new(2, i.support()).unwrap();
        prop_assert_eq!(m.newton_polyhedron::<BigInt>(), gi);
    }
}

#[test]
fn multiplicity_of_powers() {
    let cfg = OracleConfig::default();
    let mut rng = Rng8::seed_from_u64(7);
    for _ in 0..6 {
        let m = random_monomial_ideal(&mut rng);
        let i: Ideal = m.to_presentation();
        let e = multiplicity(&i, &cfg).unwrap();
        assert_eq!(multiplicity(&i.power(2).unwrap(), &cfg).unwrap(), 4 * e);
    }
    let i = ideal(vec![el(&[(1, &[3, 0]), (1, &[0, 3])]), el(&[(1, &[1, 1])])]);
    assert_eq!(multiplicity(&i, &cfg).unwrap(), 6);
    assert_eq!(multiplicity(&i.power(3).unwrap(), &cfg).unwrap(), 54);
}

#[test]
fn coordinate_simplex_covolume() {
    for (a, b, c) in [(1, 1, 1), (2, 3, 4), (5, 1, 2)] {
        let p = poly(&[vec![a, 0, 0], vec![0, b, 0], vec![0, 0, c]]);
        assert_eq!(covolume(&p).unwrap(), q(a * b * c, 6));
    }
}

#[test]
fn power_family_has_a_constant_body() {
    let f = Family::power(j(4));
    let body = limiting_body(&f, 6).unwrap();
    assert_eq!(body.status, Stabilization::At(1));
    for n in 1..=6 {
        assert_eq!(body.scaled(n), body.scaled(1));
    }
    assert!(body.chain_violations().is_empty());
    assert_eq!(noetherian_report(&f, 6).unwrap().verdict, NoetherianVerdict::Certified);
}

#[test]
fn graded_family_bodies_are_consistent() {
    let f = Family::from_rule(16, "half ceiling", |k| Ok(j((k as u32).div_ceil(2) + 1))).unwrap();
    let body = limiting_body(&f, 16).unwrap();
    assert!(body.gradedness_violations().is_empty());
    let mono = Family::from_rule(10, "m^k", |k| Ok(Monomials::maximal_power(2, k as u32).to_presentation())).unwrap();
    let body = limiting_body(&mono, 10).unwrap();
    assert_eq!(body.status, Stabilization::At(1));
    assert!(body.chain_violations().is_empty());
    assert!(body.gradedness_violations().is_empty());
}
