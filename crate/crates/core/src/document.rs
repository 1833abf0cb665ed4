//! JSON input documents.
//!
//! A polytope document lists vertices as rational strings:
//!
//! ```json
//! { "dimension": 2, "vertices": [["1", "0"], ["0", "1"], ["-1", "-1"]] }
//! ```
//!
//! and may carry a default integral Reeb vector `"reeb": [w1, …, wn, r]`.
//! A labelled polytope document gives `{ "normals": [[…]], "offsets": […] }`
//! for `Δ = {x : ⟨x, v_i⟩ + b_i ≥ 0}`. A triangulation document gives extra
//! points and cells whose indices run over the polytope document's vertices
//! followed by the extra points.

use serde::Deserialize;
use thiserror::Error;

use crate::exactlat::{Int, RatVector};
use crate::format::{parse_int, parse_rat};
use crate::polytope::{convex_hull, LabelledPolytope, PolytopeError, RationalPolytope};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DocumentError {
    #[error("malformed document: {0}")]
    Syntax(String),
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
}

/// A JSON integer, or a string holding one (for values beyond 64 bits).
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
enum IntText {
    Number(i64),
    Text(String),
}

impl IntText {
    fn value(&self) -> Result<Int, DocumentError> {
        match self {
            IntText::Number(x) => Ok(Int::from(*x)),
            IntText::Text(s) => parse_int(s).map_err(DocumentError::Syntax),
        }
    }
}

/// A rational as `"p/q"`, or a plain JSON integer.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
enum RatText {
    Number(i64),
    Text(String),
}

impl RatText {
    fn value(&self) -> Result<crate::exactlat::Rat, DocumentError> {
        match self {
            RatText::Number(x) => Ok(crate::exactlat::Rat::from_integer(Int::from(*x))),
            RatText::Text(s) => parse_rat(s).map_err(DocumentError::Syntax),
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    #[serde(default)]
    name: Option<String>,
    #[serde(default)]
    description: Option<String>,
    #[serde(default)]
    dimension: Option<usize>,
    #[serde(default)]
    vertices: Option<Vec<Vec<RatText>>>,
    #[serde(default)]
    reeb: Option<Vec<IntText>>,
    #[serde(default)]
    normals: Option<Vec<Vec<IntText>>>,
    #[serde(default)]
    offsets: Option<Vec<IntText>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Shape {
    Polytope {
        /// Points as written; the polytope is their convex hull.
        points: Vec<RatVector>,
        polytope: RationalPolytope,
        reeb: Option<Vec<Int>>,
    },
    Labelled(LabelledPolytope),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    pub name: Option<String>,
    pub description: Option<String>,
    pub shape: Shape,
}

fn ints(v: &[IntText]) -> Result<Vec<Int>, DocumentError> {
    v.iter().map(IntText::value).collect()
}

fn rats(v: &[RatText]) -> Result<RatVector, DocumentError> {
    v.iter().map(RatText::value).collect()
}

pub fn parse_document(text: &str) -> Result<Document, DocumentError> {
    let raw: RawDocument = serde_json::from_str(text).map_err(|e| DocumentError::Syntax(e.to_string()))?;
    let shape = match (raw.vertices, raw.normals, raw.offsets) {
        (Some(vertices), None, None) => {
            let points: Vec<RatVector> = vertices.iter().map(|v| rats(v)).collect::<Result<_, _>>()?;
            if let Some(n) = raw.dimension {
                if points.iter().any(|p| p.len() != n) {
                    return Err(DocumentError::Syntax(format!("vertices must have {n} coordinates")));
                }
            }
            let reeb = raw.reeb.as_deref().map(ints).transpose()?;
            let polytope = convex_hull(&points)?;
            Shape::Polytope { points, polytope, reeb }
        }
        (None, Some(normals), Some(offsets)) => {
            if raw.reeb.is_some() {
                return Err(DocumentError::Syntax("labelled polytopes take no reeb field".into()));
            }
            let normals = normals.iter().map(|v| ints(v)).collect::<Result<_, _>>()?;
            Shape::Labelled(LabelledPolytope::new(normals, ints(&offsets)?)?)
        }
        _ => {
            return Err(DocumentError::Syntax(
                "expected either \"vertices\" or both \"normals\" and \"offsets\"".into(),
            ))
        }
    };
    Ok(Document { name: raw.name, description: raw.description, shape })
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTriangulation {
    #[serde(default)]
    points: Vec<Vec<RatText>>,
    cells: Vec<Vec<usize>>,
}

/// Extra points and cells of a triangulation document, indices as written.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangulationDocument {
    pub points: Vec<RatVector>,
    pub cells: Vec<Vec<usize>>,
}

pub fn parse_triangulation(text: &str) -> Result<TriangulationDocument, DocumentError> {
    let raw: RawTriangulation = serde_json::from_str(text).map_err(|e| DocumentError::Syntax(e.to_string()))?;
    let points = raw.points.iter().map(|v| rats(v)).collect::<Result<_, _>>()?;
    Ok(TriangulationDocument { points, cells: raw.cells })
}
