use std::path::PathBuf;

use riesz_core::families::FamilySpec;
use riesz_core::{validate_problem, ComplexMatrix, ReplacementProblem, VariationalOptions};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::CliError;
use crate::files::{ExpCheckFile, MatrixFile, ProblemFile, SCHEMA_VERSION};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Analyze,
    Sweep,
    ExpCheck,
    Bounds,
    Gen,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Csv,
}

/// Parsed contents of the input file, by mode.
#[derive(Debug, Clone, PartialEq)]
pub enum InputPayload {
    Problem { file: ProblemFile, problem: ReplacementProblem },
    ExpCheck(ExpCheckFile),
    Matrix { file: MatrixFile, matrix: ComplexMatrix },
    Family(FamilySpec),
}

/// Flags that refine how the input is analyzed.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct RunOptions {
    pub input: Option<PathBuf>,
    pub output: Option<PathBuf>,
    pub format: Format,
    pub n: Option<usize>,
    pub n_max: Option<usize>,
    pub variational: VariationalOptions,
    pub include_timing: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AnalysisConfig {
    pub mode: Mode,
    pub options: RunOptions,
    pub payload: InputPayload,
}

/// Deserializes `bytes`, reporting the line and the offending field on
/// failure.
fn parse_json<T: DeserializeOwned>(bytes: &[u8]) -> Result<T, CliError> {
    let mut de = serde_json::Deserializer::from_slice(bytes);
    let value: T = serde_path_to_error::deserialize(&mut de).map_err(|err| {
        let path = err.path().to_string();
        let inner = err.into_inner();
        let message = inner.to_string();
        let field = missing_field(&message)
            .map(|f| if path == "." { f.to_string() } else { format!("{path}.{f}") })
            .unwrap_or(path);
        CliError::Parse { line: inner.line(), field, message }
    })?;
    de.end().map_err(|e| CliError::Parse { line: e.line(), field: ".".into(), message: e.to_string() })?;
    Ok(value)
}

fn missing_field(message: &str) -> Option<&str> {
    let rest = message.strip_prefix("missing field `")?;
    rest.split('`').next()
}

fn check_schema(version: &str) -> Result<(), CliError> {
    if version != SCHEMA_VERSION {
        return Err(CliError::SchemaVersionUnsupported(version.to_string()));
    }
    Ok(())
}

/// Parses and validates the input for `mode`. Range checks on `N` happen
/// here, before any analysis runs.
pub fn parse_config(mode: Mode, bytes: &[u8], options: RunOptions) -> Result<AnalysisConfig, CliError> {
    let payload = match mode {
        Mode::Analyze | Mode::Sweep => {
            let file: ProblemFile = parse_json(bytes)?;
            check_schema(&file.schema_version)?;
            let problem = validate_problem(file.to_problem()).map_err(CliError::Validation)?;
            let k = problem.count();
            if mode == Mode::Analyze {
                let n = options.n.unwrap_or(k);
                if n == 0 || n > k {
                    return Err(CliError::Invalid(format!("--n {n} is outside 1..={k} (number of vectors)")));
                }
            }
            if let Some(n_max) = options.n_max {
                if n_max == 0 || n_max > k {
                    return Err(CliError::Invalid(format!("--n-max {n_max} is outside 1..={k} (number of vectors)")));
                }
            }
            InputPayload::Problem { file, problem }
        }
        Mode::ExpCheck => {
            let file: ExpCheckFile = parse_json(bytes)?;
            check_schema(&file.schema_version)?;
            file.domain.validate().map_err(CliError::Validation)?;
            let freqs = file.frequency_set();
            freqs.validate(file.domain.dim()).map_err(CliError::Validation)?;
            let n = options.n.unwrap_or(file.n);
            if n == 0 || n > freqs.len() {
                return Err(CliError::Invalid(format!("N = {n} is outside 1..={} (number of frequencies)", freqs.len())));
            }
            let given = [file.a, file.a_prime, file.delta].iter().filter(|x| x.is_some()).count();
            if given != 0 && given != 3 {
                return Err(CliError::Invalid("give all of a, a_prime, delta or none of them".into()));
            }
            InputPayload::ExpCheck(file)
        }
        Mode::Bounds => {
            let file: MatrixFile = parse_json(bytes)?;
            check_schema(&file.schema_version)?;
            let matrix = file.to_matrix().map_err(CliError::Validation)?;
            if !matrix.is_finite() {
                return Err(CliError::Invalid("matrix has non-finite entries".into()));
            }
            if !matrix.is_square() || matrix.rows() == 0 {
                return Err(CliError::Invalid(format!(
                    "matrix must be square and nonempty, got {}x{}",
                    matrix.rows(),
                    matrix.cols()
                )));
            }
            InputPayload::Matrix { file, matrix }
        }
        Mode::Gen => InputPayload::Family(parse_json(bytes)?),
    };
    Ok(AnalysisConfig { mode, options, payload })
}
