use std::fmt;

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use super::linalg::{dot, nullspace, rank};
use crate::error::{check_dim, Error, Result};
use crate::scalar::{format_rational, primitive_direction, Int, Q};

/// A point of the nonnegative orthant with exact rational coordinates.
pub type RationalPoint<Z> = Vec<Q<Z>>;

/// Inequality `<normal, x> >= level` with a primitive nonnegative integer normal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Facet<Z: Int> {
    pub normal: Vec<Z>,
    pub level: Q<Z>,
}

impl<Z: Int> Facet<Z> {
    pub fn value(&self, x: &[Q<Z>]) -> Q<Z> {
        dot(&self.normal, x)
    }

    pub fn is_satisfied(&self, x: &[Q<Z>]) -> bool {
        self.value(x) >= self.level
    }

    pub fn is_tight(&self, x: &[Q<Z>]) -> bool {
        self.value(x) == self.level
    }
}

impl<Z: Int> fmt::Display for Facet<Z> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, n) in self.normal.iter().enumerate() {
            if n.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if n.is_one() {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "{}*x{}", n, i + 1)?;
            }
        }
        write!(f, " >= {}", format_rational(&self.level))
    }
}

/// `conv(vertices) + R^d_{>=0}` in canonical form.
///
/// Vertices are exactly the vertices of the polyhedron, sorted
/// lexicographically; facets are sorted by normal. Two polyhedra are equal as
/// sets iff they are structurally equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StaircasePolyhedron<Z: Int> {
    dim: usize,
    vertices: Vec<RationalPoint<Z>>,
    facets: Vec<Facet<Z>>,
}

impl<Z: Int> StaircasePolyhedron<Z> {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[RationalPoint<Z>] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet<Z>] {
        &self.facets
    }

    /// `R^d_{>=0}` itself, i.e. the hull of the origin.
    pub fn orthant(dim: usize) -> Result<Self> {
        hull_staircase(&[vec![Q::zero(); dim]], dim)
    }

    /// Builds a staircase from integer points; convenient in tests and parsers.
    pub fn from_integer_points(points: &[Vec<i64>]) -> Result<Self> {
        let dim = points.first().map(Vec::len).ok_or(Error::EmptyGenerator)?;
        let pts: Vec<RationalPoint<Z>> = points
            .iter()
            .map(|p| p.iter().map(|&c| crate::scalar::rat(c)).collect())
            .collect();
        hull_staircase(&pts, dim)
    }

    pub fn contains(&self, a: &[Q<Z>]) -> Result<bool> {
        check_dim(self.dim, a.len())?;
        Ok(self.facets.iter().all(|f| f.is_satisfied(a)))
    }

    /// `self ⊆ other` as sets.
    pub fn is_subset_of(&self, other: &Self) -> Result<bool> {
        check_dim(self.dim, other.dim)?;
        Ok(self
            .vertices
            .iter()
            .all(|v| other.facets.iter().all(|f| f.is_satisfied(v))))
    }

    pub fn minkowski_sum(&self, other: &Self) -> Result<Self> {
        check_dim(self.dim, other.dim)?;
        let mut sums = Vec::with_capacity(self.vertices.len() * other.vertices.len());
        for p in &self.vertices {
            for q in &other.vertices {
                sums.push(p.iter().zip(q).map(|(a, b)| a.clone() + b.clone()).collect());
            }
        }
        hull_staircase(&sums, self.dim)
    }

    /// `r · P` for rational `r > 0`.
    pub fn scale(&self, r: &Q<Z>) -> Result<Self> {
        if !r.is_positive() {
            return Err(Error::Domain(format!(
                "scale factor must be positive, got {}",
                format_rational(r)
            )));
        }
        // Positive scaling preserves lexicographic order and facet normals.
        Ok(Self {
            dim: self.dim,
            vertices: self
                .vertices
                .iter()
                .map(|v| v.iter().map(|c| c.clone() * r.clone()).collect())
                .collect(),
            facets: self
                .facets
                .iter()
                .map(|f| Facet {
                    normal: f.normal.clone(),
                    level: f.level.clone() * r.clone(),
                })
                .collect(),
        })
    }

    pub fn scale_int(&self, n: i64) -> Result<Self> {
        self.scale(&crate::scalar::rat(n))
    }

    /// Intercept on coordinate axis `axis`, if the polyhedron touches it.
    pub fn axis_intercept(&self, axis: usize) -> Option<Q<Z>> {
        self.vertices
            .iter()
            .find(|v| v.iter().enumerate().all(|(i, c)| i == axis || c.is_zero()))
            .map(|v| v[axis].clone())
    }

    /// Facets tight at `x`.
    pub(crate) fn tight_facets(&self, x: &[Q<Z>]) -> Vec<&Facet<Z>> {
        self.facets.iter().filter(|f| f.is_tight(x)).collect()
    }
}

impl<Z: Int> fmt::Display for StaircasePolyhedron<Z> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verts: Vec<String> = self.vertices.iter().map(|v| format_point(v)).collect();
        write!(f, "conv{{{}}} + R^{}_{{>=0}}", verts.join(", "), self.dim)
    }
}

pub fn format_point<Z: Int>(p: &[Q<Z>]) -> String {
    let cs: Vec<String> = p.iter().map(format_rational).collect();
    format!("({})", cs.join(","))
}

fn dominates<Z: Int>(a: &[Q<Z>], b: &[Q<Z>]) -> bool {
    a.iter().zip(b).all(|(x, y)| x >= y)
}

/// Removes duplicates and every point that componentwise dominates another.
fn minimal_points<Z: Int>(points: &[RationalPoint<Z>]) -> Vec<RationalPoint<Z>> {
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    // After a lexicographic sort a point can only dominate earlier points.
    let mut out: Vec<RationalPoint<Z>> = Vec::new();
    for p in pts {
        if !out.iter().any(|q| dominates(&p, q)) {
            out.push(p);
        }
    }
    out
}

/// Canonical `conv(points) + R^d_{>=0}`.
pub fn hull_staircase<Z: Int>(points: &[RationalPoint<Z>], dim: usize) -> Result<StaircasePolyhedron<Z>> {
    if dim == 0 {
        return Err(Error::Domain("dimension must be at least 1".into()));
    }
    if points.is_empty() {
        return Err(Error::EmptyGenerator);
    }
    for p in points {
        check_dim(dim, p.len())?;
        if p.iter().any(|c| c.is_negative()) {
            return Err(Error::Domain(format!(
                "point {} has a negative coordinate",
                format_point(p)
            )));
        }
    }
    let pts = minimal_points(points);
    let (vertices, facets) = match dim {
        1 => {
            let v = pts[0].clone();
            let facet = Facet {
                normal: vec![Z::one()],
                level: v[0].clone(),
            };
            (vec![v], vec![facet])
        }
        2 => hull_2d(pts),
        _ => hull_general(pts, dim),
    };
    Ok(StaircasePolyhedron {
        dim,
        vertices,
        facets,
    })
}

fn cross<Z: Int>(o: &[Q<Z>], a: &[Q<Z>], b: &[Q<Z>]) -> Q<Z> {
    (a[0].clone() - o[0].clone()) * (b[1].clone() - o[1].clone())
        - (a[1].clone() - o[1].clone()) * (b[0].clone() - o[0].clone())
}

/// Lower-left convex chain of an antichain sorted by increasing first coordinate.
fn hull_2d<Z: Int>(pts: Vec<RationalPoint<Z>>) -> (Vec<RationalPoint<Z>>, Vec<Facet<Z>>) {
    let mut chain: Vec<RationalPoint<Z>> = Vec::new();
    for p in pts {
        while chain.len() >= 2 && !cross(&chain[chain.len() - 2], &chain[chain.len() - 1], &p).is_positive() {
            chain.pop();
        }
        chain.push(p);
    }
    let mut facets = Vec::with_capacity(chain.len() + 1);
    facets.push(Facet {
        normal: vec![Z::one(), Z::zero()],
        level: chain[0][0].clone(),
    });
    facets.push(Facet {
        normal: vec![Z::zero(), Z::one()],
        level: chain[chain.len() - 1][1].clone(),
    });
    for w in chain.windows(2) {
        let dir = [w[0][1].clone() - w[1][1].clone(), w[1][0].clone() - w[0][0].clone()];
        let normal = primitive_direction(&dir);
        let level = dot(&normal, &w[0]);
        facets.push(Facet { normal, level });
    }
    facets.sort();
    (chain, facets)
}

/// Brute-force facet enumeration: every facet is spanned by `k` affinely
/// independent points and `d - k` coordinate rays.
fn hull_general<Z: Int>(pts: Vec<RationalPoint<Z>>, dim: usize) -> (Vec<RationalPoint<Z>>, Vec<Facet<Z>>) {
    let mut facets: Vec<Facet<Z>> = Vec::new();
    for k in 1..=dim.min(pts.len()) {
        for point_set in combinations(pts.len(), k) {
            for ray_set in combinations(dim, dim - k) {
                let base = &pts[point_set[0]];
                let mut rows: Vec<Vec<Q<Z>>> = point_set[1..]
                    .iter()
                    .map(|&i| pts[i].iter().zip(base).map(|(a, b)| a.clone() - b.clone()).collect())
                    .collect();
                for &r in &ray_set {
                    let mut e = vec![Q::zero(); dim];
                    e[r] = Q::one();
                    rows.push(e);
                }
                let ns = nullspace(&rows, dim);
                if ns.len() != 1 {
                    continue;
                }
                let mut n = primitive_direction(&ns[0]);
                if n.iter().any(|c| c.is_negative()) {
                    if n.iter().any(|c| c.is_positive()) {
                        continue;
                    }
                    n = n.into_iter().map(|c| -c).collect();
                }
                let level = dot(&n, base);
                if pts.iter().all(|p| dot(&n, p) >= level) {
                    facets.push(Facet { normal: n, level });
                }
            }
        }
    }
    facets.sort();
    facets.dedup();
    let vertices = pts
        .into_iter()
        .filter(|p| {
            let tight: Vec<Vec<Q<Z>>> = facets
                .iter()
                .filter(|f| f.is_tight(p))
                .map(|f| f.normal.iter().map(|c| Ratio::from_integer(c.clone())).collect())
                .collect();
            rank(&tight, dim) == dim
        })
        .collect();
    (vertices, facets)
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type P = StaircasePolyhedron<BigInt>;

    fn pts(v: &[&[i64]]) -> Vec<Vec<i64>> {
        v.iter().map(|p| p.to_vec()).collect()
    }

    fn hull(v: &[&[i64]]) -> P {
        P::from_integer_points(&pts(v)).unwrap()
    }

    fn verts(p: &P) -> Vec<Vec<String>> {
        p.vertices()
            .iter()
            .map(|v| v.iter().map(format_rational).collect())
            .collect()
    }

    fn q(n: i64, d: i64) -> Q<BigInt> {
        Ratio::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn hull_examples() {
        assert_eq!(hull(&[&[1, 1], &[0, 2]]).vertices(), hull(&[&[0, 2], &[1, 1]]).vertices());
        assert_eq!(verts(&hull(&[&[1, 1], &[0, 2]])), vec![vec!["0", "2"], vec!["1", "1"]]);
        assert_eq!(verts(&hull(&[&[1, 1]])), vec![vec!["1", "1"]]);
        assert_eq!(
            verts(&hull(&[&[2, 1], &[1, 2], &[3, 3]])),
            vec![vec!["1", "2"], vec!["2", "1"]]
        );
    }

    #[test]
    fn hull_errors() {
        assert_eq!(hull_staircase::<BigInt>(&[], 2), Err(Error::EmptyGenerator));
        let neg = vec![vec![q(-1, 1), q(0, 1)]];
        assert!(matches!(hull_staircase(&neg, 2), Err(Error::Domain(_))));
        let bad = vec![vec![q(1, 1)]];
        assert!(matches!(hull_staircase(&bad, 2), Err(Error::Dimension { .. })));
    }

    #[test]
    fn collinear_points_are_absorbed() {
        let p = hull(&[&[2, 0], &[1, 1], &[0, 2]]);
        assert_eq!(verts(&p), vec![vec!["0", "2"], vec!["2", "0"]]);
        let p3 = hull(&[&[2, 0, 0], &[1, 1, 0], &[0, 2, 0], &[0, 0, 2]]);
        assert_eq!(p3.vertices().len(), 3);
    }

    #[test]
    fn facets_2d() {
        let p = hull(&[&[2, 1], &[1, 2]]);
        let rendered: Vec<String> = p.facets().iter().map(|f| f.to_string()).collect();
        assert_eq!(rendered, vec!["x2 >= 1", "x1 >= 1", "x1 + x2 >= 3"]);
    }

    #[test]
    fn minkowski_examples() {
        let p = hull(&[&[1, 1], &[0, 2]]);
        let s = p.minkowski_sum(&p).unwrap();
        assert_eq!(s, hull(&[&[2, 2], &[1, 3], &[0, 4]]));
        assert_eq!(p.minkowski_sum(&P::orthant(2).unwrap()).unwrap(), p);
        let r = hull(&[&[4, 0], &[2, 1], &[1, 2], &[0, 4]]);
        assert_eq!(r.minkowski_sum(&r).unwrap(), r.scale_int(2).unwrap());
        assert!(matches!(
            p.minkowski_sum(&P::orthant(3).unwrap()),
            Err(Error::Dimension { .. })
        ));
    }

    #[test]
    fn scale_examples() {
        let p = hull(&[&[2, 1], &[1, 2]]);
        assert_eq!(p.scale_int(3).unwrap(), hull(&[&[6, 3], &[3, 6]]));
        assert_eq!(p.scale_int(1).unwrap(), p);
        assert_eq!(hull(&[&[3, 0], &[0, 3]]).scale(&q(1, 3)).unwrap(), hull(&[&[1, 0], &[0, 1]]));
        assert!(matches!(p.scale(&q(0, 1)), Err(Error::Domain(_))));
        assert!(matches!(p.scale(&q(-1, 2)), Err(Error::Domain(_))));
    }

    #[test]
    fn containment() {
        let p = hull(&[&[2, 1], &[1, 2]]);
        assert!(p.contains(&[q(2, 1), q(2, 1)]).unwrap());
        assert!(!p.contains(&[q(1, 1), q(1, 1)]).unwrap());
        assert!(p.contains(&[q(3, 2), q(3, 2)]).unwrap());
        assert!(matches!(p.contains(&[q(1, 1)]), Err(Error::Dimension { .. })));
    }

    #[test]
    fn equality_and_subset() {
        let a = hull(&[&[2, 0], &[0, 2]]).scale(&q(1, 2)).unwrap();
        assert_eq!(a, hull(&[&[1, 0], &[0, 1]]));
        assert!(hull(&[&[2, 1], &[1, 2]]).is_subset_of(&hull(&[&[1, 0], &[0, 1]])).unwrap());
        assert!(!hull(&[&[1, 0], &[0, 1]]).is_subset_of(&hull(&[&[2, 1], &[1, 2]])).unwrap());
    }

    #[test]
    fn three_dimensional_hull() {
        let p = hull(&[&[4, 0, 0], &[2, 5, 4], &[0, 3, 1], &[3, 1, 2], &[1, 1, 3]]);
        // (2,5,4) dominates (1,1,3); (3,1,2) dominates
        // 0.6·(4,0,0) + 0.1·(0,3,1) + 0.3·(1,1,3) = (2.7, 0.6, 1.0).
        assert_eq!(p.vertices().len(), 3);
        for v in [[0, 3, 1], [1, 1, 3], [4, 0, 0]] {
            let v: Vec<Q<BigInt>> = v.iter().map(|&c| q(c, 1)).collect();
            assert!(p.vertices().contains(&v));
        }
        assert!(p.contains(&[q(3, 1), q(1, 1), q(2, 1)]).unwrap());
        assert!(p.facets().iter().all(|f| f.normal.iter().all(|c| !c.is_negative())));
        // Every facet is tight on at least one vertex.
        assert!(p.facets().iter().all(|f| p.vertices().iter().any(|v| f.is_tight(v))));
    }

    #[test]
    fn axis_intercepts() {
        let p = hull(&[&[3, 0], &[1, 1], &[0, 5]]);
        assert_eq!(p.axis_intercept(0), Some(q(3, 1)));
        assert_eq!(p.axis_intercept(1), Some(q(5, 1)));
        assert_eq!(hull(&[&[1, 1]]).axis_intercept(0), None);
    }

    #[test]
    fn fixed_width_backing_integer() {
        let p = StaircasePolyhedron::<i64>::from_integer_points(&pts(&[&[2, 1], &[1, 2]])).unwrap();
        assert_eq!(p.vertices().len(), 2);
    }
}
