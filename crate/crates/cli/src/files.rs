//! On-disk JSON schemas.
//!
//! Complex numbers are `[re, im]` pairs and vectors are arrays of those.
//! Arrays are 0-based: `vectors[j][k]` holds `⟨w_{j+1}, v_{k+1}⟩`.

use num_complex::Complex64;
use riesz_core::exp_basis::{Domain, FrequencySet};
use riesz_core::{CoeffVector, ComplexMatrix, ReplacementProblem};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: &str = "1";

fn default_schema() -> String {
    SCHEMA_VERSION.to_string()
}

fn default_tol() -> f64 {
    1e-10
}

pub type ComplexPair = [f64; 2];

pub fn to_complex(p: &ComplexPair) -> Complex64 {
    Complex64::new(p[0], p[1])
}

pub fn to_pair(z: &Complex64) -> ComplexPair {
    [z.re, z.im]
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub schema_version: String,
    pub ambient_dim: usize,
    pub vectors: Vec<Vec<ComplexPair>>,
    #[serde(default = "default_tol")]
    pub unit_tol: f64,
    #[serde(default = "default_tol")]
    pub rank_tol: f64,
}

impl ProblemFile {
    /// Unvalidated in-memory problem.
    pub fn to_problem(&self) -> ReplacementProblem {
        let vectors =
            self.vectors.iter().map(|v| CoeffVector::new(v.iter().map(to_complex).collect())).collect();
        ReplacementProblem::new(self.ambient_dim, vectors).with_tolerances(self.unit_tol, self.rank_tol)
    }

    pub fn from_problem(p: &ReplacementProblem) -> Self {
        Self {
            schema_version: default_schema(),
            ambient_dim: p.ambient_dim,
            vectors: p.replacements.iter().map(|w| w.as_slice().iter().map(to_pair).collect()).collect(),
            unit_tol: p.unit_tol,
            rank_tol: p.rank_tol,
        }
    }
}

/// A frequency given either as a bare number (`d = 1`) or as a vector.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FrequencyEntry {
    Scalar(f64),
    Vector(Vec<f64>),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExpCheckFile {
    #[serde(default = "default_schema")]
    pub schema_version: String,
    pub domain: Domain,
    pub frequencies: Vec<FrequencyEntry>,
    #[serde(rename = "N")]
    pub n: usize,
    /// When `a`, `a_prime` and `delta` are all omitted they are suggested
    /// from the measured coefficient matrix.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a_prime: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<f64>,
}

impl ExpCheckFile {
    pub fn frequency_set(&self) -> FrequencySet {
        FrequencySet::new(
            self.frequencies
                .iter()
                .map(|f| match f {
                    FrequencyEntry::Scalar(x) => vec![*x],
                    FrequencyEntry::Vector(v) => v.clone(),
                })
                .collect(),
        )
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixFile {
    #[serde(default = "default_schema")]
    pub schema_version: String,
    pub matrix: Vec<Vec<ComplexPair>>,
}

impl MatrixFile {
    pub fn to_matrix(&self) -> riesz_core::Result<ComplexMatrix> {
        let rows: Vec<Vec<Complex64>> = self.matrix.iter().map(|r| r.iter().map(to_complex).collect()).collect();
        ComplexMatrix::from_rows(&rows)
    }
}
