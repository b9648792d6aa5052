use serde::{Deserialize, Serialize};

use super::BodySpec;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::Real;

/// Wire form of a body, as read from and written to JSON files:
///
/// ```json
/// {"kind": "rhombus", "a": [2.0, 1.0]}
/// {"kind": "hpolytope", "normals": [[1, 0], [0, 1]], "offsets": [1, 1], "vertices": [[1, 1], [1, -1]]}
/// {"kind": "linear_image", "base": {"kind": "box", "a": [1, 1]}, "matrix": [[1, 0.5], [0, 1]]}
/// ```
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum BodyJson {
    Rhombus {
        a: Vec<f64>,
    },
    Box {
        a: Vec<f64>,
    },
    Ellipsoid {
        a: Vec<f64>,
    },
    Hpolytope {
        normals: Vec<Vec<f64>>,
        offsets: Vec<f64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        vertices: Option<Vec<Vec<f64>>>,
    },
    LinearImage {
        base: Box<BodyJson>,
        matrix: Vec<Vec<f64>>,
    },
}

impl BodyJson {
    /// Validates and builds the body. Error messages are prefixed with the
    /// path of the offending field, e.g. `base.matrix: ...`.
    pub fn to_spec<T: Real>(&self) -> Result<BodySpec<T>> {
        self.build("")
    }

    fn build<T: Real>(&self, path: &str) -> Result<BodySpec<T>> {
        let at = |field: &str, e: Error| Error::InvalidInput(format!("{path}{field}: {e}"));
        let cv = |v: &[f64]| v.iter().map(|&x| T::lit(x)).collect::<Vec<T>>();
        let cvv = |vs: &[Vec<f64>]| vs.iter().map(|v| cv(v)).collect::<Vec<_>>();
        match self {
            Self::Rhombus { a } => BodySpec::rhombus(cv(a)).map_err(|e| at("a", e)),
            Self::Box { a } => BodySpec::box_(cv(a)).map_err(|e| at("a", e)),
            Self::Ellipsoid { a } => BodySpec::ellipsoid(cv(a)).map_err(|e| at("a", e)),
            Self::Hpolytope { normals, offsets, vertices } => {
                BodySpec::hpolytope(cvv(normals), cv(offsets), vertices.as_deref().map(cvv))
                    .map_err(|e| at("normals/offsets/vertices", e))
            }
            Self::LinearImage { base, matrix } => {
                let base = base.build(&format!("{path}base."))?;
                let m = Matrix::from_rows(&cvv(matrix)).map_err(|e| at("matrix", e))?;
                BodySpec::linear_image(base, m).map_err(|e| at("matrix", e))
            }
        }
    }
}

impl<T: Real> From<&BodySpec<T>> for BodyJson {
    fn from(spec: &BodySpec<T>) -> Self {
        let cv = |v: &[T]| v.iter().map(|x| x.as_f64()).collect::<Vec<f64>>();
        let cvv = |vs: &[Vec<T>]| vs.iter().map(|v| cv(v)).collect::<Vec<_>>();
        match spec {
            BodySpec::Rhombus(a) => Self::Rhombus { a: cv(a.as_slice()) },
            BodySpec::Box(a) => Self::Box { a: cv(a.as_slice()) },
            BodySpec::Ellipsoid(a) => Self::Ellipsoid { a: cv(a.as_slice()) },
            BodySpec::HPolytope(p) => Self::Hpolytope {
                normals: cvv(p.normals()),
                offsets: cv(p.offsets()),
                vertices: p.vertices().map(cvv),
            },
            BodySpec::LinearImage { base, map } => {
                Self::LinearImage { base: Box::new(Self::from(base.as_ref())), matrix: cvv(&map.matrix().rows()) }
            }
        }
    }
}
