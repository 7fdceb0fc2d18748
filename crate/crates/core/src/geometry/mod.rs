//! Exact rational polyhedral kernel for staircase polyhedra
//! `conv(S) + R^d_{>=0}`.

mod faces;
mod linalg;
mod polyhedron;
mod volume;

pub use faces::{compact_faces, compact_facets, CompactFace};
#[cfg(test)]
pub(crate) use linalg::dot;
pub use polyhedron::{format_point, hull_staircase, Facet, RationalPoint, StaircasePolyhedron};
pub use volume::{check_cofinite, covolume, covolume_in_box, default_box_side, polytope_volume};

