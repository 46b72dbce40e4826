use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("parse error at line {line}, field `{field}`: {message}")]
    Parse { line: usize, field: String, message: String },
    #[error("unsupported schema_version {0:?} (expected \"1\")")]
    SchemaVersionUnsupported(String),
    #[error("invalid input: {0}")]
    Validation(riesz_core::Error),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("numerical failure: {0}")]
    Numerical(riesz_core::Error),
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("cannot write output: {0}")]
    UnwritableOutput(std::io::Error),
}

impl CliError {
    /// 2 for bad input, 3 for numerical non-convergence, 1 otherwise.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse { .. }
            | CliError::SchemaVersionUnsupported(_)
            | CliError::Validation(_)
            | CliError::Invalid(_)
            | CliError::Read { .. } => 2,
            CliError::Numerical(riesz_core::Error::NonConvergence { .. }) => 3,
            CliError::Numerical(_) | CliError::UnwritableOutput(_) => 1,
        }
    }
}

/// Classifies an error raised while analyzing already-validated input.
pub fn numerical(err: riesz_core::Error) -> CliError {
    match err {
        riesz_core::Error::NonConvergence { .. } => CliError::Numerical(err),
        other => CliError::Validation(other),
    }
}
