//! Report assembly and serialization.
//!
//! JSON reports carry `schema_version`, the `mode`, an echo of the parsed
//! input and run parameters, and a mode-specific `result`. Keys are emitted
//! in a fixed order and floats in shortest round-trip form, so identical
//! inputs produce identical bytes. Wall-clock timing is only included on
//! request.
//!
//! CSV column order per mode:
//! - `analyze`: `N,is_riesz_basis,lambda_min_head,rank_head,tilde_A,tilde_B,A,B,variational_A,variational_B,closed_form_A,closed_form_B`
//! - `sweep`: `N,tilde_A,tilde_B,A,B,tail_energy`
//! - `exp-check`: `N,a,a_prime,delta,condition_holds,A_lower,B_upper,worst_row,worst_sum,diag_min,diag_max,gershgorin_sigma_min_lower,sigma_min_sq`
//! - `bounds`: `i,R,C,s,lo,hi` (one row per matrix row, 0-based `i`)
//! - `gen`: `vector,coord,re,im` (0-based indices)

use riesz_core::exp_basis::{
    coefficient_matrix, evaluate_condition, suggest_parameters, BasisEnumeration, ExpCertificate,
};
use riesz_core::gershgorin::{singular_intervals, GershgorinReport};
use riesz_core::{
    closed_form_n1, exact_constants, riesz_basis_test, sweep, tilde_constants, variational_constants,
    FrameConstants, RieszVerdict, SweepOptions, SweepReport, VariationalOptions,
};
use serde::{Deserialize, Serialize};

use crate::config::{AnalysisConfig, Format, InputPayload, Mode};
use crate::error::{numerical, CliError};
use crate::files::{ProblemFile, SCHEMA_VERSION};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Parameters {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n_max: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub variational: Option<VariationalOptions>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalyzeResult {
    pub n: usize,
    pub verdict: RieszVerdict,
    pub tilde: FrameConstants,
    pub exact: FrameConstants,
    pub variational: FrameConstants,
    /// Only for `N = 1`.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub closed_form_n1: Option<FrameConstants>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepResult {
    /// `liminf_a`/`limsup_b` are extremes over the trailing window, not limits.
    pub estimate_label: String,
    pub report: SweepReport,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExpCheckResult {
    /// Whether `(a, a′, δ)` were read off the coefficient matrix.
    pub suggested_parameters: bool,
    pub certificate: ExpCertificate,
    /// `σ_min(M_N)²` and `σ_max(M_N)²`: the frame constants of the truncated
    /// projected system, for comparison with the certified bounds.
    pub sigma_min_sq: f64,
    pub sigma_max_sq: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundsResult {
    pub gershgorin: GershgorinReport,
    /// Descending.
    pub singular_values: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "mode", content = "result", rename_all = "kebab-case")]
pub enum Payload {
    Analyze(AnalyzeResult),
    Sweep(SweepResult),
    ExpCheck(ExpCheckResult),
    Bounds(BoundsResult),
    Gen(ProblemFile),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: String,
    pub input: serde_json::Value,
    pub parameters: Parameters,
    #[serde(flatten)]
    pub payload: Payload,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub timing_ms: Option<f64>,
}

fn echo<T: Serialize>(value: &T) -> serde_json::Value {
    serde_json::to_value(value).expect("input echo serializes")
}

/// Runs the analysis described by `config`.
pub fn run(config: &AnalysisConfig) -> Result<Report, CliError> {
    let opts = &config.options;
    let mut parameters = Parameters { n: None, n_max: None, variational: None };
    let (input, payload) = match (&config.mode, &config.payload) {
        (Mode::Analyze, InputPayload::Problem { file, problem }) => {
            let n = opts.n.unwrap_or(problem.count());
            parameters.n = Some(n);
            parameters.variational = Some(opts.variational);
            let result = AnalyzeResult {
                n,
                verdict: riesz_basis_test(problem, n).map_err(numerical)?,
                tilde: tilde_constants(problem, n).map_err(numerical)?,
                exact: exact_constants(problem, n).map_err(numerical)?,
                variational: variational_constants(problem, n, &opts.variational).map_err(numerical)?,
                closed_form_n1: if n == 1 { Some(closed_form_n1(problem).map_err(numerical)?) } else { None },
            };
            (echo(file), Payload::Analyze(result))
        }
        (Mode::Sweep, InputPayload::Problem { file, problem }) => {
            let mut truncated = problem.clone();
            if let Some(n_max) = opts.n_max {
                truncated.replacements.truncate(n_max);
                parameters.n_max = Some(n_max);
            }
            let report = sweep(&truncated, &SweepOptions::default()).map_err(numerical)?;
            let estimate_label = format!(
                "window estimate over N = {}..={}; not a true limit",
                report.window_start, report.window_end
            );
            (echo(file), Payload::Sweep(SweepResult { estimate_label, report }))
        }
        (Mode::ExpCheck, InputPayload::ExpCheck(file)) => {
            let n = opts.n.unwrap_or(file.n);
            parameters.n = Some(n);
            let freqs = file.frequency_set();
            let enumeration = BasisEnumeration::new(file.domain.dim());
            let m = coefficient_matrix(&file.domain, &freqs, &enumeration, n).map_err(numerical)?;
            let (suggested, (a, a_prime, delta)) = match (file.a, file.a_prime, file.delta) {
                (Some(a), Some(ap), Some(d)) => (false, (a, ap, d)),
                _ => (
                    true,
                    suggest_parameters(&m).ok_or_else(|| {
                        CliError::Invalid("no admissible (a, a_prime, delta): off-diagonal mass too large".into())
                    })?,
                ),
            };
            let certificate = evaluate_condition(&file.domain, &freqs, n, a, a_prime, delta).map_err(numerical)?;
            let sv = riesz_core::eigen::singular_values(&m).map_err(numerical)?;
            let result = ExpCheckResult {
                suggested_parameters: suggested,
                certificate,
                sigma_min_sq: sv[sv.len() - 1].powi(2),
                sigma_max_sq: sv[0].powi(2),
            };
            (echo(file), Payload::ExpCheck(result))
        }
        (Mode::Bounds, InputPayload::Matrix { file, matrix }) => {
            let result = BoundsResult {
                gershgorin: singular_intervals(matrix).map_err(numerical)?,
                singular_values: riesz_core::eigen::singular_values(matrix).map_err(numerical)?,
            };
            (echo(file), Payload::Bounds(result))
        }
        (Mode::Gen, InputPayload::Family(spec)) => {
            let problem = spec.generate().map_err(CliError::Validation)?;
            (echo(spec), Payload::Gen(ProblemFile::from_problem(&problem)))
        }
        (mode, _) => return Err(CliError::Invalid(format!("input does not match mode {mode:?}"))),
    };
    Ok(Report { schema_version: SCHEMA_VERSION.to_string(), input, parameters, payload, timing_ms: None })
}

fn fmt(x: f64) -> String {
    format!("{x}")
}

fn csv_bytes(header: &[&str], rows: Vec<Vec<String>>) -> Result<Vec<u8>, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| CliError::UnwritableOutput(std::io::Error::other(e));
    w.write_record(header).map_err(io)?;
    for r in rows {
        w.write_record(&r).map_err(io)?;
    }
    w.into_inner().map_err(|e| CliError::UnwritableOutput(std::io::Error::other(e.to_string())))
}

/// Serializes `report`. `gen` in JSON form emits the bare problem file so
/// that it can be fed straight back to `analyze` or `sweep`.
pub fn emit_report(report: &Report, format: Format) -> Result<Vec<u8>, CliError> {
    match format {
        Format::Json => {
            let mut out = match &report.payload {
                Payload::Gen(problem) => serde_json::to_vec_pretty(problem),
                _ => serde_json::to_vec_pretty(report),
            }
            .map_err(|e| CliError::UnwritableOutput(std::io::Error::other(e)))?;
            out.push(b'\n');
            Ok(out)
        }
        Format::Csv => emit_csv(&report.payload),
    }
}

fn emit_csv(payload: &Payload) -> Result<Vec<u8>, CliError> {
    match payload {
        Payload::Analyze(r) => {
            let (cf_a, cf_b) = r.closed_form_n1.map_or((String::new(), String::new()), |c| (fmt(c.lower), fmt(c.upper)));
            csv_bytes(
                &[
                    "N",
                    "is_riesz_basis",
                    "lambda_min_head",
                    "rank_head",
                    "tilde_A",
                    "tilde_B",
                    "A",
                    "B",
                    "variational_A",
                    "variational_B",
                    "closed_form_A",
                    "closed_form_B",
                ],
                vec![vec![
                    r.n.to_string(),
                    r.verdict.is_riesz_basis.to_string(),
                    fmt(r.verdict.lambda_min_head),
                    r.verdict.rank_head.to_string(),
                    fmt(r.tilde.lower),
                    fmt(r.tilde.upper),
                    fmt(r.exact.lower),
                    fmt(r.exact.upper),
                    fmt(r.variational.lower),
                    fmt(r.variational.upper),
                    cf_a,
                    cf_b,
                ]],
            )
        }
        Payload::Sweep(s) => csv_bytes(
            &["N", "tilde_A", "tilde_B", "A", "B", "tail_energy"],
            s.report
                .per_n
                .iter()
                .zip(&s.report.tail_energy)
                .map(|(r, e)| {
                    vec![
                        r.n.to_string(),
                        fmt(r.tilde.lower),
                        fmt(r.tilde.upper),
                        fmt(r.exact.lower),
                        fmt(r.exact.upper),
                        fmt(*e),
                    ]
                })
                .collect(),
        ),
        Payload::ExpCheck(e) => {
            let c = &e.certificate;
            csv_bytes(
                &[
                    "N",
                    "a",
                    "a_prime",
                    "delta",
                    "condition_holds",
                    "A_lower",
                    "B_upper",
                    "worst_row",
                    "worst_sum",
                    "diag_min",
                    "diag_max",
                    "gershgorin_sigma_min_lower",
                    "sigma_min_sq",
                ],
                vec![vec![
                    c.n.to_string(),
                    fmt(c.a),
                    fmt(c.a_prime),
                    fmt(c.delta),
                    c.condition_holds.to_string(),
                    fmt(c.a_lower),
                    fmt(c.b_upper),
                    c.worst_row.to_string(),
                    fmt(c.worst_sum),
                    fmt(c.diag_min),
                    fmt(c.diag_max),
                    fmt(c.gershgorin_sigma_min_lower),
                    fmt(e.sigma_min_sq),
                ]],
            )
        }
        Payload::Bounds(b) => {
            let g = &b.gershgorin;
            csv_bytes(
                &["i", "R", "C", "s", "lo", "hi"],
                (0..g.s.len())
                    .map(|i| {
                        vec![
                            i.to_string(),
                            fmt(g.row_sums[i]),
                            fmt(g.col_sums[i]),
                            fmt(g.s[i]),
                            fmt(g.intervals[i].0),
                            fmt(g.intervals[i].1),
                        ]
                    })
                    .collect(),
            )
        }
        Payload::Gen(p) => csv_bytes(
            &["vector", "coord", "re", "im"],
            p.vectors
                .iter()
                .enumerate()
                .flat_map(|(j, v)| {
                    v.iter().enumerate().map(move |(k, z)| vec![j.to_string(), k.to_string(), fmt(z[0]), fmt(z[1])])
                })
                .collect(),
        ),
    }
}
