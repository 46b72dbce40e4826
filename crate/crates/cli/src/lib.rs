//! File formats, reports and subcommand wiring for the `riesz` command.

pub mod config;
pub mod error;
pub mod files;
pub mod report;

pub use config::{parse_config, AnalysisConfig, Format, InputPayload, Mode, RunOptions};
pub use error::CliError;
pub use report::{emit_report, run, Report};
