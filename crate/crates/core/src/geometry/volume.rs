//! Exact volumes: convex hulls of point sets and co-volumes of staircases.

use num_traits::{One, Signed, Zero};

use super::linalg::{dot, nullspace, rank, solve};
use super::polyhedron::{combinations, RationalPoint, StaircasePolyhedron};
use crate::error::{Error, Result};
use crate::scalar::{ceil_int, primitive_direction, Int, Q};

/// d-dimensional volume of `conv(points)`; zero when the hull is degenerate.
///
/// Dimension two uses the shoelace formula. Higher dimensions enumerate the
/// facets of the hull and sum the pyramids from a fixed apex, recursing on
/// the coordinate projection of each facet.
pub fn polytope_volume<Z: Int>(points: &[RationalPoint<Z>], dim: usize) -> Q<Z> {
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() <= dim {
        return Q::zero();
    }
    match dim {
        0 => Q::zero(),
        1 => pts[pts.len() - 1][0].clone() - pts[0][0].clone(),
        2 => polygon_area(&pts),
        _ => pyramid_volume(&pts, dim),
    }
}

fn cross<Z: Int>(o: &[Q<Z>], a: &[Q<Z>], b: &[Q<Z>]) -> Q<Z> {
    (a[0].clone() - o[0].clone()) * (b[1].clone() - o[1].clone())
        - (a[1].clone() - o[1].clone()) * (b[0].clone() - o[0].clone())
}

/// Area of the convex hull of sorted, deduplicated planar points.
fn polygon_area<Z: Int>(pts: &[RationalPoint<Z>]) -> Q<Z> {
    // Andrew's monotone chain: lower chain left to right, upper chain back.
    let mut hull: Vec<&RationalPoint<Z>> = Vec::new();
    for p in pts {
        while hull.len() >= 2 && !cross(hull[hull.len() - 2], hull[hull.len() - 1], p).is_positive() {
            hull.pop();
        }
        hull.push(p);
    }
    let lower = hull.len() + 1;
    for p in pts.iter().rev().skip(1) {
        while hull.len() >= lower && !cross(hull[hull.len() - 2], hull[hull.len() - 1], p).is_positive() {
            hull.pop();
        }
        hull.push(p);
    }
    hull.pop();
    shoelace(&hull)
}

/// Shoelace area of a simple polygon given in counter-clockwise order.
pub(crate) fn shoelace<Z: Int>(poly: &[&RationalPoint<Z>]) -> Q<Z> {
    let n = poly.len();
    if n < 3 {
        return Q::zero();
    }
    let mut twice = Q::<Z>::zero();
    for i in 0..n {
        let (a, b) = (poly[i], poly[(i + 1) % n]);
        twice = twice + a[0].clone() * b[1].clone() - b[0].clone() * a[1].clone();
    }
    twice.abs() / crate::scalar::rat(2)
}

fn pyramid_volume<Z: Int>(pts: &[RationalPoint<Z>], dim: usize) -> Q<Z> {
    let base = &pts[0];
    let diffs: Vec<Vec<Q<Z>>> = pts[1..]
        .iter()
        .map(|p| p.iter().zip(base).map(|(a, b)| a.clone() - b.clone()).collect())
        .collect();
    if rank(&diffs, dim) < dim {
        return Q::zero();
    }
    let mut facets: Vec<(Vec<Z>, Q<Z>)> = Vec::new();
    for set in combinations(pts.len(), dim) {
        let p0 = &pts[set[0]];
        let rows: Vec<Vec<Q<Z>>> = set[1..]
            .iter()
            .map(|&i| pts[i].iter().zip(p0).map(|(a, b)| a.clone() - b.clone()).collect())
            .collect();
        let ns = nullspace(&rows, dim);
        if ns.len() != 1 {
            continue;
        }
        let mut n = primitive_direction(&ns[0]);
        let mut level = dot(&n, p0);
        let above = pts.iter().all(|p| dot(&n, p) >= level);
        let below = pts.iter().all(|p| dot(&n, p) <= level);
        if !above && !below {
            continue;
        }
        if !above {
            n = n.into_iter().map(|c| -c).collect();
            level = -level;
        }
        facets.push((n, level));
    }
    facets.sort();
    facets.dedup();

    let apex = base;
    let mut total = Q::<Z>::zero();
    for (n, level) in &facets {
        let height = dot(n, apex) - level.clone();
        if height.is_zero() {
            continue;
        }
        let j = (0..dim)
            .max_by_key(|&i| n[i].abs())
            .expect("dimension is positive");
        let projected: Vec<RationalPoint<Z>> = pts
            .iter()
            .filter(|p| dot(n, p) == *level)
            .map(|p| {
                p.iter()
                    .enumerate()
                    .filter(|&(i, _)| i != j)
                    .map(|(_, c)| c.clone())
                    .collect()
            })
            .collect();
        let area = polytope_volume(&projected, dim - 1);
        let denom = Q::from_integer(n[j].abs()) * crate::scalar::rat::<Z>(dim as i64);
        total = total + height.abs() * area / denom;
    }
    total
}

/// Checks that the staircase meets every coordinate axis.
pub fn check_cofinite<Z: Int>(p: &StaircasePolyhedron<Z>) -> Result<()> {
    for axis in 0..p.dim() {
        if p.axis_intercept(axis).is_none() {
            return Err(Error::NotCoFinite { axis });
        }
    }
    Ok(())
}

/// Smallest integer box side that contains every vertex (at least one).
pub fn default_box_side<Z: Int>(p: &StaircasePolyhedron<Z>) -> Z {
    let mut m = Z::one();
    for v in p.vertices() {
        for c in v {
            let c = ceil_int(c);
            if c > m {
                m = c;
            }
        }
    }
    m
}

/// Exact volume of `R^d_{>=0} \ P`.
pub fn covolume<Z: Int>(p: &StaircasePolyhedron<Z>) -> Result<Q<Z>> {
    covolume_in_box(p, &default_box_side(p))
}

/// Co-volume computed as `M^d - vol(P ∩ [0, M]^d)`; independent of `M` as
/// long as `M` bounds every vertex coordinate.
pub fn covolume_in_box<Z: Int>(p: &StaircasePolyhedron<Z>, side: &Z) -> Result<Q<Z>> {
    check_cofinite(p)?;
    let m = Q::from_integer(side.clone());
    if p.vertices().iter().flatten().any(|c| *c > m) {
        return Err(Error::Domain(format!(
            "box side {side} does not contain every vertex"
        )));
    }
    let d = p.dim();
    // Rows of the H-representation `a · x >= b`.
    let mut cons: Vec<(Vec<Q<Z>>, Q<Z>)> = p
        .facets()
        .iter()
        .map(|f| {
            (
                f.normal.iter().map(|c| Q::from_integer(c.clone())).collect(),
                f.level.clone(),
            )
        })
        .collect();
    for i in 0..d {
        let mut a = vec![Q::zero(); d];
        a[i] = -Q::<Z>::one();
        cons.push((a, -m.clone()));
    }
    let feasible = |x: &[Q<Z>]| {
        cons.iter().all(|(a, b)| {
            a.iter()
                .zip(x)
                .fold(Q::<Z>::zero(), |acc, (s, t)| acc + s.clone() * t.clone())
                >= *b
        })
    };
    let mut corners: Vec<RationalPoint<Z>> = Vec::new();
    for set in combinations(cons.len(), d) {
        let a: Vec<Vec<Q<Z>>> = set.iter().map(|&i| cons[i].0.clone()).collect();
        let b: Vec<Q<Z>> = set.iter().map(|&i| cons[i].1.clone()).collect();
        if let Some(x) = solve(&a, &b) {
            if feasible(&x) {
                corners.push(x);
            }
        }
    }
    let mut cube = Q::<Z>::one();
    for _ in 0..d {
        cube = cube * m.clone();
    }
    Ok(cube - polytope_volume(&corners, d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::faces::compact_facets;
    use num_bigint::BigInt;
    use num_rational::Ratio;

    type P = StaircasePolyhedron<BigInt>;

    fn hull(v: &[&[i64]]) -> P {
        P::from_integer_points(&v.iter().map(|p| p.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn q(n: i64, d: i64) -> Q<BigInt> {
        Ratio::new(BigInt::from(n), BigInt::from(d))
    }

    /// Shoelace over the polygon (0,0), (x_max,0), ..., (0,y_max).
    fn origin_shoelace(p: &P) -> Q<BigInt> {
        let mut poly: Vec<RationalPoint<BigInt>> = vec![vec![q(0, 1), q(0, 1)]];
        poly.extend(p.vertices().iter().rev().cloned());
        let refs: Vec<&RationalPoint<BigInt>> = poly.iter().collect();
        shoelace(&refs)
    }

    /// Sum of cones from the origin over compact facets (convenient staircases).
    fn cone_sum(p: &P) -> Q<BigInt> {
        let d = p.dim();
        let mut total = q(0, 1);
        for f in compact_facets(p) {
            let on: Vec<RationalPoint<BigInt>> =
                p.vertices().iter().filter(|v| f.is_tight(v)).cloned().collect();
            let j = d - 1;
            let proj: Vec<RationalPoint<BigInt>> = on.iter().map(|v| v[..j].to_vec()).collect();
            let area = polytope_volume(&proj, d - 1);
            total += f.level.clone() * area / (Q::from_integer(f.normal[j].clone()) * q(d as i64, 1));
        }
        total
    }

    #[test]
    fn covolume_examples() {
        let p = hull(&[&[4, 0], &[2, 1], &[1, 2], &[0, 4]]);
        assert_eq!(covolume(&p).unwrap(), q(11, 2));
        assert_eq!(covolume(&hull(&[&[1, 0], &[0, 1]])).unwrap(), q(1, 2));
        for (a, b) in [(1, 1), (2, 3), (5, 7), (4, 1)] {
            assert_eq!(covolume(&hull(&[&[a, 0], &[0, b]])).unwrap(), q(a * b, 2));
        }
        assert_eq!(covolume(&hull(&[&[1, 1]])), Err(Error::NotCoFinite { axis: 0 }));
        assert_eq!(covolume(&hull(&[&[3, 0], &[0, 1]]).scale(&q(1, 2)).unwrap()).unwrap(), q(3, 8));
    }

    #[test]
    fn box_size_does_not_matter() {
        let p = hull(&[&[4, 0], &[2, 1], &[1, 2], &[0, 4]]);
        for m in [4, 5, 9] {
            assert_eq!(covolume_in_box(&p, &BigInt::from(m)).unwrap(), q(11, 2));
        }
        assert!(matches!(covolume_in_box(&p, &BigInt::from(3)), Err(Error::Domain(_))));
    }

    #[test]
    fn two_dimensional_routes_agree() {
        for p in [
            hull(&[&[4, 0], &[2, 1], &[1, 2], &[0, 4]]),
            hull(&[&[7, 0], &[3, 1], &[1, 3], &[0, 6]]),
            hull(&[&[2, 0], &[0, 3]]),
        ] {
            assert_eq!(covolume(&p).unwrap(), origin_shoelace(&p));
            assert_eq!(covolume(&p).unwrap(), cone_sum(&p));
        }
    }

    #[test]
    fn three_dimensional_covolume() {
        // Simplex with legs a, b, c: abc/6.
        let p = hull(&[&[2, 0, 0], &[0, 3, 0], &[0, 0, 5]]);
        assert_eq!(covolume(&p).unwrap(), q(30, 6));
        let p = hull(&[&[4, 0, 0], &[0, 3, 1], &[3, 1, 2], &[1, 1, 3], &[0, 0, 5], &[0, 4, 0]]);
        assert_eq!(covolume(&p).unwrap(), cone_sum(&p));
        assert_eq!(
            covolume_in_box(&p, &BigInt::from(7)).unwrap(),
            covolume(&p).unwrap()
        );
    }

    #[test]
    fn polytope_volumes() {
        let cube: Vec<RationalPoint<BigInt>> = (0..8)
            .map(|m| (0..3).map(|i| q(((m >> i) & 1) * 2, 1)).collect())
            .collect();
        assert_eq!(polytope_volume(&cube, 3), q(8, 1));
        let flat: Vec<RationalPoint<BigInt>> = vec![
            vec![q(0, 1), q(0, 1), q(0, 1)],
            vec![q(1, 1), q(0, 1), q(0, 1)],
            vec![q(0, 1), q(1, 1), q(0, 1)],
            vec![q(1, 1), q(1, 1), q(0, 1)],
        ];
        assert_eq!(polytope_volume(&flat, 3), q(0, 1));
    }
}
