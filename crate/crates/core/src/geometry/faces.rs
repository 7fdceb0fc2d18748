use std::fmt;

use num_traits::Zero;

use super::linalg::{dot, rank};
use super::polyhedron::{format_point, Facet, RationalPoint, StaircasePolyhedron};
use crate::error::{Error, Result};
use crate::scalar::{Int, Q};

/// A bounded face, with a strictly positive normal minimized exactly on it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CompactFace<Z: Int> {
    pub vertices: Vec<RationalPoint<Z>>,
    pub affine_dim: usize,
    pub normal: Vec<Z>,
    pub level: Q<Z>,
}

impl<Z: Int> CompactFace<Z> {
    pub fn is_vertex(&self) -> bool {
        self.affine_dim == 0
    }

    pub fn is_edge(&self) -> bool {
        self.affine_dim == 1
    }

    /// Whether `a` lies on the supporting hyperplane of the face.
    pub fn on_hyperplane(&self, a: &[Q<Z>]) -> bool {
        dot(&self.normal, a) == self.level
    }
}

impl<Z: Int> fmt::Display for CompactFace<Z> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vs: Vec<String> = self.vertices.iter().map(|v| format_point(v)).collect();
        write!(f, "conv{{{}}}", vs.join(","))
    }
}

fn normal_sum<Z: Int>(facets: &[&Facet<Z>], dim: usize) -> Vec<Z> {
    let mut n = vec![Z::zero(); dim];
    for f in facets {
        for (a, b) in n.iter_mut().zip(&f.normal) {
            *a = a.clone() + b.clone();
        }
    }
    n
}

fn as_rows<Z: Int>(facets: &[&Facet<Z>]) -> Vec<Vec<Q<Z>>> {
    facets
        .iter()
        .map(|f| f.normal.iter().map(|c| Q::from_integer(c.clone())).collect())
        .collect()
}

fn face_from<Z: Int>(
    p: &StaircasePolyhedron<Z>,
    vertices: Vec<RationalPoint<Z>>,
    affine_dim: usize,
    tight: &[&Facet<Z>],
) -> Option<CompactFace<Z>> {
    let normal = normal_sum(tight, p.dim());
    if !normal.iter().all(|c| c.is_positive()) {
        return None;
    }
    let level = dot(&normal, &vertices[0]);
    Some(CompactFace {
        vertices,
        affine_dim,
        normal,
        level,
    })
}

/// All compact faces: vertices, then edges, then (for `d = 3`) bounded 2-faces.
///
/// The supporting normal of a face is the sum of the normals of the facets
/// containing it, which lies in the relative interior of its normal cone.
pub fn compact_faces<Z: Int>(p: &StaircasePolyhedron<Z>) -> Result<Vec<CompactFace<Z>>> {
    let d = p.dim();
    if d > 3 {
        return Err(Error::UnsupportedDimension {
            dim: d,
            operation: "compact face enumeration",
        });
    }
    let mut faces = Vec::new();
    for v in p.vertices() {
        let tight = p.tight_facets(v);
        if let Some(face) = face_from(p, vec![v.clone()], 0, &tight) {
            faces.push(face);
        }
    }
    if d >= 2 {
        let vs = p.vertices();
        for i in 0..vs.len() {
            for j in i + 1..vs.len() {
                let common: Vec<&Facet<Z>> = p
                    .facets()
                    .iter()
                    .filter(|f| f.is_tight(&vs[i]) && f.is_tight(&vs[j]))
                    .collect();
                if rank(&as_rows(&common), d) != d - 1 {
                    continue;
                }
                if let Some(face) = face_from(p, vec![vs[i].clone(), vs[j].clone()], 1, &common) {
                    faces.push(face);
                }
            }
        }
    }
    if d == 3 {
        for f in p.facets() {
            if !f.normal.iter().all(|c| c.is_positive()) {
                continue;
            }
            let on: Vec<RationalPoint<Z>> = p.vertices().iter().filter(|v| f.is_tight(v)).cloned().collect();
            if on.len() >= 3 {
                faces.push(CompactFace {
                    vertices: on,
                    affine_dim: 2,
                    normal: f.normal.clone(),
                    level: f.level.clone(),
                });
            }
        }
    }
    Ok(faces)
}

/// Bounded facets (compact faces of dimension `d - 1`).
pub fn compact_facets<Z: Int>(p: &StaircasePolyhedron<Z>) -> Vec<&Facet<Z>> {
    p.facets()
        .iter()
        .filter(|f| f.normal.iter().all(|c| c.is_positive()) && !f.level.is_zero())
        .collect()
}
