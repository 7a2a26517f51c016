//! JSON encodings shared by the library and the CLI.
//!
//! Matrices: `{"rows": n, "cols": m, "entries": [[e, ...], ...]}` where each
//! entry is `"p/q"` (real rational, `"/q"` optional) or
//! `{"re": "p/q", "im": "r/s"}`. Ray sets: `{"dim": n, "rays": [[...], ...]}`.
//! Generator sets: `{"matrices": [<matrix>, ...]}`.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::cones::Cone;
use crate::error::{Error, Result};
use crate::linalg::{format_rational, parse_rational, Matrix, Scalar};

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum EntryJson {
    Real(String),
    Int(i64),
    Complex { re: String, im: String },
}

impl EntryJson {
    fn to_scalar(&self) -> Result<Scalar> {
        match self {
            EntryJson::Real(s) => s.parse(),
            EntryJson::Int(v) => Ok(Scalar::from_int(*v)),
            EntryJson::Complex { re, im } => {
                Ok(Scalar::new(parse_rational(re)?, parse_rational(im)?))
            }
        }
    }

    fn from_scalar(s: &Scalar) -> Self {
        if s.is_real() {
            EntryJson::Real(format_rational(s.re()))
        } else {
            EntryJson::Complex {
                re: format_rational(s.re()),
                im: format_rational(s.im()),
            }
        }
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<EntryJson>>,
}

impl MatrixJson {
    fn into_matrix(self) -> Result<Matrix> {
        if self.entries.len() != self.rows || self.entries.iter().any(|r| r.len() != self.cols) {
            return Err(Error::Parse(format!(
                "entries do not match declared shape {}x{}",
                self.rows, self.cols
            )));
        }
        let rows = self
            .entries
            .iter()
            .map(|r| {
                r.iter()
                    .map(EntryJson::to_scalar)
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_rows(rows)
    }

    fn from_matrix(m: &Matrix) -> Self {
        Self {
            rows: m.rows(),
            cols: m.cols(),
            entries: m
                .to_rows()
                .iter()
                .map(|r| r.iter().map(EntryJson::from_scalar).collect())
                .collect(),
        }
    }
}

impl Serialize for Matrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixJson::from_matrix(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        MatrixJson::deserialize(d)?
            .into_matrix()
            .map_err(D::Error::custom)
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        EntryJson::from_scalar(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        EntryJson::deserialize(d)?
            .to_scalar()
            .map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct GeneratorsJson {
    matrices: Vec<Matrix>,
}

#[derive(Serialize, Deserialize)]
struct RaysJson {
    dim: usize,
    rays: Vec<Vec<Scalar>>,
}

pub fn matrix_from_json(s: &str) -> Result<Matrix> {
    serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
}

pub fn matrix_to_json(m: &Matrix) -> String {
    serde_json::to_string(m).expect("matrix serializes")
}

pub fn generators_from_json(s: &str) -> Result<Vec<Matrix>> {
    let g: GeneratorsJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    Ok(g.matrices)
}

pub fn generators_to_json(ms: &[Matrix]) -> String {
    serde_json::to_string(&GeneratorsJson {
        matrices: ms.to_vec(),
    })
    .expect("generators serialize")
}

pub fn cone_from_json(s: &str) -> Result<Cone> {
    let r: RaysJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    Cone::new(r.dim, r.rays)
}

pub fn cone_to_value(k: &Cone) -> serde_json::Value {
    serde_json::to_value(RaysJson {
        dim: k.dim(),
        rays: k.rays().iter().map(|r| r.coords().to_vec()).collect(),
    })
    .expect("rays serialize")
}
