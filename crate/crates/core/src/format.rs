//! JSON embedding files.
//!
//! ```json
//! { "kind": "real", "values": [0.1, -0.2] }
//! { "kind": "complex", "values": [[0.4, 0.5235987755982988], [0.9, 1.57]] }
//! ```
//!
//! Complex values are `[magnitude, phase_radians]` pairs.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::embedding::{ComplexEmbedding, RealEmbedding};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "values", rename_all = "lowercase")]
enum RawFile {
    Real(Vec<f64>),
    Complex(Vec<[f64; 2]>),
}

/// An embedding as read from or written to a file.
#[derive(Debug, Clone, PartialEq)]
pub enum Embedding {
    Real(RealEmbedding),
    Complex(ComplexEmbedding),
}

impl Embedding {
    pub fn dim(&self) -> usize {
        match self {
            Embedding::Real(v) => v.dim(),
            Embedding::Complex(v) => v.dim(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Embedding::Real(_) => "real",
            Embedding::Complex(_) => "complex",
        }
    }

    pub fn to_complex(&self) -> ComplexEmbedding {
        match self {
            Embedding::Real(v) => v.to_complex(),
            Embedding::Complex(v) => v.clone(),
        }
    }

    pub fn normalize(&self) -> Result<Self> {
        Ok(match self {
            Embedding::Real(v) => Embedding::Real(v.normalize()?),
            Embedding::Complex(v) => Embedding::Complex(v.normalize()?),
        })
    }

    pub fn truncate(&self, k: usize) -> Result<Self> {
        Ok(match self {
            Embedding::Real(v) => Embedding::Real(v.truncate(k)?),
            Embedding::Complex(v) => Embedding::Complex(v.truncate(k)?),
        })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawFile = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
        match raw {
            RawFile::Real(values) => Ok(Embedding::Real(RealEmbedding::new(values)?)),
            RawFile::Complex(pairs) => {
                let pairs: Vec<(f64, f64)> = pairs.into_iter().map(|[m, p]| (m, p)).collect();
                Ok(Embedding::Complex(ComplexEmbedding::from_polar_pairs(&pairs)?))
            }
        }
    }

    pub fn to_json(&self) -> String {
        let raw = match self {
            Embedding::Real(v) => RawFile::Real(v.values().to_vec()),
            Embedding::Complex(v) => {
                RawFile::Complex(v.magnitudes().iter().zip(v.phases()).map(|(&m, &p)| [m, p]).collect())
            }
        };
        serde_json::to_string(&raw).expect("finite floats always serialize")
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = fs::read_to_string(path).map_err(|e| Error::Format(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }
}

impl From<RealEmbedding> for Embedding {
    fn from(v: RealEmbedding) -> Self {
        Embedding::Real(v)
    }
}

impl From<ComplexEmbedding> for Embedding {
    fn from(v: ComplexEmbedding) -> Self {
        Embedding::Complex(v)
    }
}
