//! Newton non-degeneracy.
//!
//! Two independent tests. The face route (`d = 2`) restricts the generators
//! to every compact face of `Γ(I)` and asks whether the restricted system has
//! a common zero on the torus; along an edge this reduces to a gcd of
//! univariate polynomials over `ℚ`. The multiplicity route compares the
//! oracle multiplicity `e(I)` with `d!·covol(Γ(I))`; equality holds exactly
//! for NND ideals and does not depend on the generating set.

use std::fmt;

use num_traits::Zero;

use crate::error::{check_dim, Error, Result};
use crate::geometry::{compact_faces, covolume, CompactFace, RationalPoint};
use crate::monomial::{ideal_i0, MonomialIdeal};
use crate::oracle::{multiplicity, OracleConfig};
use crate::scalar::{format_rational, primitive_direction, Int, Q};
use crate::series::{IdealPresentation, LocalElement};
use crate::upoly::UPoly;

/// Generators restricted to one compact face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceRestriction<Z: Int> {
    pub face: CompactFace<Z>,
    pub generators: Vec<LocalElement<Z>>,
}

impl<Z: Int> FaceRestriction<Z> {
    pub fn new(ideal: &IdealPresentation<Z>, face: &CompactFace<Z>) -> Result<Self> {
        let generators = ideal
            .generators()
            .iter()
            .map(|g| face_restrict(g, face))
            .collect::<Result<_>>()?;
        Ok(Self {
            face: face.clone(),
            generators,
        })
    }
}

/// Terms of `g` lying on the supporting hyperplane of `face`.
pub fn face_restrict<Z: Int>(g: &LocalElement<Z>, face: &CompactFace<Z>) -> Result<LocalElement<Z>> {
    check_dim(face.normal.len(), g.dim())?;
    let kept = g
        .terms()
        .filter(|(e, _)| face.on_hyperplane(&e.to_point::<Z>()))
        .map(|(e, c)| (c.clone(), e.clone()));
    LocalElement::from_terms(g.dim(), kept)
}

/// Face polynomials of a planar edge in the edge parameter `t`.
///
/// The edge starts at the vertex with the smaller `x` coordinate and moves
/// by the primitive step `(u, -v)`; the term at `start + k·(u, -v)` becomes
/// the coefficient of `t^k`, so `t` stands for `x^u / y^v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgePolynomialSystem<Z: Int> {
    pub start: RationalPoint<Z>,
    pub step: (Z, Z),
    pub polynomials: Vec<UPoly<Z>>,
}

impl<Z: Int> fmt::Display for EdgePolynomialSystem<Z> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ps: Vec<String> = self.polynomials.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", ps.join(", "))
    }
}

pub fn edge_system<Z: Int>(gens: &[LocalElement<Z>], edge: &CompactFace<Z>) -> Result<EdgePolynomialSystem<Z>> {
    let d = edge.normal.len();
    if d != 2 {
        return Err(Error::UnsupportedDimension {
            dim: d,
            operation: "edge polynomial systems",
        });
    }
    if !edge.is_edge() || edge.vertices.len() != 2 {
        return Err(Error::FaceKind {
            vertices: edge.vertices.len(),
        });
    }
    let (a, b) = (&edge.vertices[0], &edge.vertices[1]);
    let (start, end) = if a[0] <= b[0] { (a, b) } else { (b, a) };
    let dir: Vec<Q<Z>> = end.iter().zip(start).map(|(e, s)| e.clone() - s.clone()).collect();
    let prim = primitive_direction(&dir);
    let u = prim[0].clone();
    let v = -prim[1].clone();
    let u_q = Q::from_integer(u.clone());
    let mut polynomials = Vec::with_capacity(gens.len());
    for g in gens {
        check_dim(d, g.dim())?;
        let mut coeffs: Vec<Q<Z>> = Vec::new();
        for (e, c) in face_restrict(g, edge)?.terms() {
            let offset = e.to_point::<Z>()[0].clone() - start[0].clone();
            let k = offset / u_q.clone();
            if !k.is_integer() {
                return Err(Error::Domain(format!(
                    "exponent {} is not a lattice step from the edge start",
                    e
                )));
            }
            let k = k.to_integer().to_usize().ok_or_else(|| Error::Domain("edge parameter overflow".into()))?;
            if coeffs.len() <= k {
                coeffs.resize(k + 1, Q::zero());
            }
            coeffs[k] = c.clone();
        }
        polynomials.push(UPoly::new(coeffs));
    }
    Ok(EdgePolynomialSystem {
        start: start.clone(),
        step: (u, v),
        polynomials,
    })
}

/// No common zero on the torus: some polynomial is nonzero and the gcd of
/// the nonzero ones has no root other than `t = 0`.
pub fn face_nondegenerate<Z: Int>(sys: &EdgePolynomialSystem<Z>) -> bool {
    polys_nondegenerate(&sys.polynomials)
}

fn polys_nondegenerate<Z: Int>(polys: &[UPoly<Z>]) -> bool {
    let mut nonzero = polys.iter().filter(|p| !p.is_zero());
    let Some(first) = nonzero.next() else {
        return false;
    };
    let g = nonzero.fold(first.clone(), |acc, p| acc.gcd(p));
    g.strip_t_powers().degree() == Some(0)
}

/// Verdict for one compact face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceVerdict<Z: Int> {
    pub face: CompactFace<Z>,
    pub restricted: Vec<LocalElement<Z>>,
    pub system: Option<EdgePolynomialSystem<Z>>,
    pub nondegenerate: bool,
}

/// Per-face results of the face criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceReport<Z: Int> {
    pub faces: Vec<FaceVerdict<Z>>,
}

impl<Z: Int> FaceReport<Z> {
    pub fn is_nnd(&self) -> bool {
        self.faces.iter().all(|f| f.nondegenerate)
    }

    pub fn failing_faces(&self) -> Vec<&CompactFace<Z>> {
        self.faces.iter().filter(|f| !f.nondegenerate).map(|f| &f.face).collect()
    }
}

/// Runs the face criterion on every compact face of `Γ(I)` (`d = 2`).
pub fn face_report<Z: Int>(ideal: &IdealPresentation<Z>) -> Result<FaceReport<Z>> {
    if ideal.dim() != 2 {
        return Err(Error::UnsupportedDimension {
            dim: ideal.dim(),
            operation: "the face criterion",
        });
    }
    let gamma = ideal.newton_polyhedron()?;
    let mut faces = Vec::new();
    for face in compact_faces(&gamma)? {
        let restriction = FaceRestriction::new(ideal, &face)?;
        let (system, nondegenerate) = if face.is_vertex() {
            (None, restriction.generators.iter().any(|g| !g.is_zero()))
        } else {
            let sys = edge_system(ideal.generators(), &face)?;
            let ok = face_nondegenerate(&sys);
            (Some(sys), ok)
        };
        faces.push(FaceVerdict {
            face,
            restricted: restriction.generators,
            system,
            nondegenerate,
        });
    }
    Ok(FaceReport { faces })
}

pub fn is_nnd_face<Z: Int>(ideal: &IdealPresentation<Z>) -> Result<bool> {
    Ok(face_report(ideal)?.is_nnd())
}

/// `e(I)` against `d!·covol(Γ(I))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityComparison<Z: Int> {
    pub multiplicity: u64,
    pub covolume: Q<Z>,
    pub d_factorial_covolume: Q<Z>,
}

impl<Z: Int> MultiplicityComparison<Z> {
    pub fn is_equal(&self) -> bool {
        Q::from_integer(Z::from_u64(self.multiplicity).expect("multiplicity fits")) == self.d_factorial_covolume
    }

    /// `e(I) − d!·covol(Γ(I))`, never negative.
    pub fn gap(&self) -> Q<Z> {
        Q::from_integer(Z::from_u64(self.multiplicity).expect("multiplicity fits")) - self.d_factorial_covolume.clone()
    }
}

impl<Z: Int> fmt::Display for MultiplicityComparison<Z> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "e = {}, d!covol = {}",
            self.multiplicity,
            format_rational(&self.d_factorial_covolume)
        )
    }
}

pub(crate) fn factorial<Z: Int>(d: usize) -> Z {
    (1..=d).fold(Z::one(), |acc, k| acc * Z::from_usize(k).expect("small"))
}

pub fn multiplicity_comparison<Z: Int>(
    ideal: &IdealPresentation<Z>,
    cfg: &OracleConfig,
) -> Result<MultiplicityComparison<Z>> {
    let cov = covolume(&ideal.newton_polyhedron()?)?;
    let e = multiplicity(ideal, cfg)?;
    Ok(MultiplicityComparison {
        multiplicity: e,
        d_factorial_covolume: cov.clone() * Q::from_integer(factorial(ideal.dim())),
        covolume: cov,
    })
}

pub fn is_nnd_multiplicity<Z: Int>(ideal: &IdealPresentation<Z>, cfg: &OracleConfig) -> Result<bool> {
    Ok(multiplicity_comparison(ideal, cfg)?.is_equal())
}

/// Outcome of [`closure_if_nnd`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NndClosure {
    /// The integral closure, a monomial ideal.
    Monomial(MonomialIdeal),
    NotNnd,
}

impl NndClosure {
    pub fn monomial(&self) -> Option<&MonomialIdeal> {
        match self {
            NndClosure::Monomial(m) => Some(m),
            NndClosure::NotNnd => None,
        }
    }
}

/// The integral closure of an `m`-primary NND ideal: all monomials with
/// exponent in `Γ(I)`.
///
/// A passing face criterion is conclusive. When it fails, or `d ≠ 2`, the
/// multiplicity route decides, since the face verdict is relative to the
/// given generators.
pub fn closure_if_nnd<Z: Int>(ideal: &IdealPresentation<Z>, cfg: &OracleConfig) -> Result<NndClosure> {
    let gamma = ideal.newton_polyhedron()?;
    crate::geometry::check_cofinite(&gamma)?;
    let nnd = if ideal.dim() == 2 && is_nnd_face(ideal)? {
        true
    } else {
        is_nnd_multiplicity(ideal, cfg)?
    };
    Ok(if nnd {
        NndClosure::Monomial(ideal_i0(&gamma))
    } else {
        NndClosure::NotNnd
    })
}
