use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Failures reported by the analysis routines.
///
/// Vector indices in `NonUnitVector` and `NonFiniteEntry` are 1-based
/// (`w_1` is the first replacement vector).
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("replacement vector w_{index} has squared norm {norm_sq}, expected 1")]
    NonUnitVector { index: usize, norm_sq: f64 },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("{count} replacement vectors exceed the ambient dimension {ambient_dim}")]
    TooManyReplacements { count: usize, ambient_dim: usize },
    #[error("problem has no replacement vectors")]
    NoReplacements,
    #[error("non-finite entry in vector w_{index} at coordinate {coord}")]
    NonFiniteEntry { index: usize, coord: usize },
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not Hermitian: entry ({row}, {col}) deviates by {deviation}")]
    NotHermitian { row: usize, col: usize, deviation: f64 },
    #[error("{routine} did not converge within {iterations} iterations")]
    NonConvergence { routine: &'static str, iterations: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("intervals {first} and {second} overlap")]
    OverlappingIntervals { first: usize, second: usize },
    #[error("domain measure is {measure}, expected 1")]
    MeasureNotOne { measure: f64 },
    #[error("domain does not tile the line by integer translations")]
    NotTiling,
    #[error("sufficient condition violated at row {worst_row}: {reason} (value {worst_sum})")]
    ConditionViolated { worst_row: usize, worst_sum: f64, reason: String },
}
