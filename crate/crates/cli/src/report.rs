//! Machine-readable reports. Rationals are `"p/q"` strings throughout.

use serde::{Deserialize, Serialize};

use newtonpoly::geometry::{hull_staircase, CompactFace, StaircasePolyhedron};
use newtonpoly::{format_rational, parse_rational, Error, Polyhedron, Rational};
use num_bigint::BigInt;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacetJson {
    pub normal: Vec<String>,
    pub level: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceJson {
    pub vertices: Vec<Vec<String>>,
    pub normal: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyJson {
    pub c: Option<usize>,
    pub e: Option<String>,
    pub d_factorial_covol: Option<String>,
    /// `EQUAL` or `UNEQUAL` for `e(𝓘)` against `d!·covol(C(𝓘))`.
    pub verdict: Option<String>,
    pub noetherian: String,
    pub axis_intercepts: Vec<Vec<Option<String>>>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub vertices: Vec<Vec<String>>,
    pub facets: Vec<FacetJson>,
    pub covol: Option<String>,
    pub d_factorial_covol: Option<String>,
    pub multiplicity: Option<String>,
    pub nnd: Option<bool>,
    pub failing_faces: Vec<FaceJson>,
    pub closure: Option<Vec<Vec<u32>>>,
    pub family: Option<FamilyJson>,
}

pub fn point_json(p: &[Rational]) -> Vec<String> {
    p.iter().map(format_rational).collect()
}

pub fn face_json(f: &CompactFace<BigInt>) -> FaceJson {
    FaceJson {
        vertices: f.vertices.iter().map(|v| point_json(v)).collect(),
        normal: f.normal.iter().map(|n| n.to_string()).collect(),
    }
}

impl Report {
    pub fn with_polyhedron(p: &Polyhedron) -> Self {
        Self {
            vertices: p.vertices().iter().map(|v| point_json(v)).collect(),
            facets: p
                .facets()
                .iter()
                .map(|f| FacetJson {
                    normal: f.normal.iter().map(|n| n.to_string()).collect(),
                    level: format_rational(&f.level),
                })
                .collect(),
            ..Self::default()
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }

    /// Rebuilds the polyhedron from the reported vertices.
    pub fn polyhedron(&self) -> Result<Polyhedron, Error> {
        let dim = self.vertices.first().map(Vec::len).ok_or(Error::EmptyGenerator)?;
        let pts = self
            .vertices
            .iter()
            .map(|v| {
                v.iter()
                    .map(|c| parse_rational(c).ok_or_else(|| Error::Domain(format!("bad coordinate '{c}'"))))
                    .collect::<Result<Vec<Rational>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        hull_staircase(&pts, dim)
    }
}

/// Parses a JSON report and rebuilds its polyhedron.
pub fn polyhedron_from_json(src: &str) -> Result<StaircasePolyhedron<BigInt>, String> {
    let r: Report = serde_json::from_str(src).map_err(|e| e.to_string())?;
    r.polyhedron().map_err(|e| e.to_string())
}
