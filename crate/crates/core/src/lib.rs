//! Exact Newton polyhedra of ideals in a power-series model of a regular
//! local ring.
//!
//! The crate computes Newton polyhedra from generators, certifies Newton
//! non-degeneracy by a face criterion and by comparing the Hilbert–Samuel
//! multiplicity with `d!` times the co-volume, and analyses graded families
//! through their limiting bodies. All arithmetic is exact.
//!
//! Every type is generic over the integer `Z` backing the rationals
//! `Ratio<Z>`; the aliases below fix `Z = BigInt`.

pub mod error;
pub mod family;
pub mod geometry;
pub mod monomial;
pub mod nnd;
pub mod oracle;
pub mod scalar;
pub mod series;
pub mod upoly;

pub use error::{Error, Result};
pub use scalar::{format_rational, parse_rational, Int, Q};

use num_bigint::BigInt;

pub type Rational = Q<BigInt>;
pub type Point = geometry::RationalPoint<BigInt>;
pub type Polyhedron = geometry::StaircasePolyhedron<BigInt>;
pub type Face = geometry::CompactFace<BigInt>;
pub type Element = series::LocalElement<BigInt>;
pub type Ideal = series::IdealPresentation<BigInt>;
pub type Monomials = monomial::MonomialIdeal;
pub type Family = family::FamilySpec<BigInt>;
