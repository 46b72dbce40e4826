use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use riesz_cli::{emit_report, parse_config, run, CliError, Format, Mode, RunOptions};
use riesz_core::VariationalOptions;

/// Riesz-basis tests, frame constants and exponential-basis certificates.
#[derive(Parser)]
#[command(name = "riesz", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verdict plus tilde, exact, variational (and N=1 closed-form) constants at one N.
    Analyze {
        #[command(flatten)]
        io: IoArgs,
        /// Number of replaced vectors; defaults to all of them.
        #[arg(long)]
        n: Option<usize>,
        #[command(flatten)]
        variational: VariationalArgs,
    },
    /// Tilde and exact constants for N = 1..n-max with limit diagnostics.
    Sweep {
        #[command(flatten)]
        io: IoArgs,
        #[arg(long)]
        n_max: Option<usize>,
    },
    /// Sufficient-condition certificate for exponential Riesz bases.
    ExpCheck {
        #[command(flatten)]
        io: IoArgs,
        /// Overrides "N" from the input file.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Gershgorin-type singular-value intervals of a square matrix.
    Bounds {
        #[command(flatten)]
        io: IoArgs,
    },
    /// Writes a generated family instance as a problem file.
    Gen {
        #[command(flatten)]
        io: IoArgs,
    },
}

#[derive(Args)]
struct IoArgs {
    #[arg(long)]
    input: PathBuf,
    /// Defaults to standard output.
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Include wall-clock timing in the report (output is then not reproducible).
    #[arg(long)]
    timing: bool,
    /// No diagnostics on standard error except errors.
    #[arg(long)]
    quiet: bool,
}

#[derive(Args)]
struct VariationalArgs {
    #[arg(long, default_value_t = 64)]
    restarts: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 2000)]
    max_iters: usize,
}

fn execute(mode: Mode, io: &IoArgs, options: RunOptions) -> Result<(), CliError> {
    let started = Instant::now();
    let bytes = std::fs::read(&io.input).map_err(|source| CliError::Read { path: io.input.clone(), source })?;
    let config = parse_config(mode, &bytes, options)?;
    let mut report = run(&config)?;
    let elapsed = started.elapsed().as_secs_f64() * 1e3;
    if io.timing {
        report.timing_ms = Some(elapsed);
    }
    let out = emit_report(&report, io.format)?;
    match &io.output {
        Some(path) => std::fs::write(path, &out).map_err(CliError::UnwritableOutput)?,
        None => std::io::stdout().lock().write_all(&out).map_err(CliError::UnwritableOutput)?,
    }
    if !io.quiet {
        eprintln!("riesz: {mode:?} finished in {elapsed:.1} ms");
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (mode, io, options) = match &cli.command {
        Command::Analyze { io, n, variational } => {
            let variational = VariationalOptions {
                restarts: variational.restarts,
                max_iters: variational.max_iters,
                seed: variational.seed,
                ..Default::default()
            };
            (Mode::Analyze, io, RunOptions { n: *n, variational, ..Default::default() })
        }
        Command::Sweep { io, n_max } => (Mode::Sweep, io, RunOptions { n_max: *n_max, ..Default::default() }),
        Command::ExpCheck { io, n } => (Mode::ExpCheck, io, RunOptions { n: *n, ..Default::default() }),
        Command::Bounds { io } => (Mode::Bounds, io, RunOptions::default()),
        Command::Gen { io } => (Mode::Gen, io, RunOptions::default()),
    };
    let options = RunOptions {
        input: Some(io.input.clone()),
        output: io.output.clone(),
        format: io.format,
        include_timing: io.timing,
        ..options
    };
    match execute(mode, io, options) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("riesz: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}
