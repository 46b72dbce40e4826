//! Optimal frame constants of the replaced systems.
//!
//! Two systems are analyzed for each `N`:
//! - `B_N = {w_1..w_N, v_{N+1}, v_{N+2}, ...}`, the replaced basis;
//! - `B̃_N = {p′_N(w_1)..p′_N(w_N), v_{N+1}, ...}`, its projected twin,
//!   which is a Riesz basis exactly when `B_N` is.
//!
//! Routes implemented here:
//! - [`tilde_constants`]: `Ã_N = σ_min(M_N)²`, `B̃_N = max(σ_max(M_N)², 1)`;
//! - [`exact_constants`]: extreme eigenvalues of the Gram matrix of the `M`
//!   vectors `{w_1..w_N, v_{N+1}..v_M}`, clamped against 1 for the
//!   untouched tail `v_k`, `k > M`;
//! - [`closed_form_n1`]: `A_1 = 1 − ‖p″_1(w_1)‖`, `B_1 = 1 + ‖p″_1(w_1)‖`.
//!
//! The variational route lives in [`crate::variational`].

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::coeff::{dot, ReplacementProblem};
use crate::eigen::{hermitian_eigen_range, singular_values};
use crate::error::Result;
use crate::gram::{mixing_matrix, riesz_basis_test, RieszVerdict};
use crate::matrix::HermitianMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum FrameMethod {
    EigenOracle,
    TildeSingular,
    Variational,
    ClosedFormN1,
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct FrameConstants {
    pub lower: f64,
    pub upper: f64,
    pub method: FrameMethod,
    /// Set when the system is not a Riesz basis (lower bound at or below
    /// the rank tolerance).
    pub degenerate: bool,
}

impl FrameConstants {
    fn new(lower: f64, upper: f64, method: FrameMethod, rank_tol: f64) -> Self {
        Self { lower, upper, method, degenerate: lower <= rank_tol }
    }
}

/// Frame constants of the projected system `B̃_N` from the singular values
/// of `M_N`.
pub fn tilde_constants(problem: &ReplacementProblem, n: usize) -> Result<FrameConstants> {
    let m = mixing_matrix(problem, n)?;
    let sv = singular_values(&m)?;
    let smax = sv[0];
    let smin = sv[sv.len() - 1];
    let lower = smin * smin;
    let upper = (smax * smax).max(1.0);
    if lower <= problem.rank_tol {
        return Ok(FrameConstants { lower: 0.0, upper, method: FrameMethod::TildeSingular, degenerate: true });
    }
    Ok(FrameConstants::new(lower, upper, FrameMethod::TildeSingular, problem.rank_tol))
}

/// Gram matrix of `{w_1..w_N, v_{N+1}..v_M}`.
pub fn replaced_gram(problem: &ReplacementProblem, n: usize) -> Result<HermitianMatrix> {
    problem.check_n(n)?;
    let m = problem.ambient_dim;
    let w = &problem.replacements;
    let zero = Complex64::new(0.0, 0.0);
    Ok(HermitianMatrix::from_upper(m, |i, j| match (i < n, j < n) {
        (true, true) => dot(w[i].as_slice(), w[j].as_slice()),
        // ⟨w_i, v_{j+1}⟩ is the (j+1)-th coefficient of w_i.
        (true, false) => w[i][j],
        (false, false) if i == j => Complex64::new(1.0, 0.0),
        _ => zero,
    }))
}

/// Exact frame constants of `B_N` from the finite Gram matrix.
pub fn exact_constants(problem: &ReplacementProblem, n: usize) -> Result<FrameConstants> {
    let g = replaced_gram(problem, n)?;
    let (lo, hi) = hermitian_eigen_range(&g)?;
    Ok(FrameConstants::new(lo.min(1.0), hi.max(1.0), FrameMethod::EigenOracle, problem.rank_tol))
}

/// Closed form for `N = 1`, in terms of `‖p″_1(w_1)‖`.
pub fn closed_form_n1(problem: &ReplacementProblem) -> Result<FrameConstants> {
    problem.check_n(1)?;
    let tail: f64 = problem.replacements[0].tail(1).iter().map(|z| z.norm_sqr()).sum();
    let tail = libm::sqrt(tail);
    Ok(FrameConstants::new(1.0 - tail, 1.0 + tail, FrameMethod::ClosedFormN1, problem.rank_tol))
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SweepOptions {
    /// The tail-energy hint is set when the trailing half of the window
    /// carries at most this fraction of the total `Σ‖v_n − w_n‖²`.
    pub flatten_ratio: f64,
    /// Totals at or below this are treated as zero energy.
    pub energy_floor: f64,
}

impl Default for SweepOptions {
    fn default() -> Self {
        Self { flatten_ratio: 0.1, energy_floor: 1e-12 }
    }
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SweepRecord {
    pub n: usize,
    pub tilde: FrameConstants,
    pub exact: FrameConstants,
    pub riesz: RieszVerdict,
}

/// Frame constants for `N = 1..K` plus limit diagnostics.
///
/// `liminf_a` and `limsup_b` are window estimates: the minimum of the exact
/// lower constants and the maximum of the exact upper constants over the
/// trailing half `N ≥ window_start` of the analyzed range. They are not
/// true limits.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SweepReport {
    pub per_n: Vec<SweepRecord>,
    pub window_start: usize,
    pub window_end: usize,
    pub liminf_a: f64,
    pub limsup_b: f64,
    /// `‖v_n − w_n‖²` for `n = 1..K`.
    pub tail_energy: Vec<f64>,
    pub uniform_convergence_hint: bool,
}

/// `‖v_n − w_n‖² = 2 − 2·Re⟨w_n, v_n⟩` for a unit `w_n`; computed
/// directly from the coefficients.
pub fn tail_energy(problem: &ReplacementProblem, n: usize) -> Result<f64> {
    problem.check_n(n)?;
    let w = problem.replacements[n - 1].as_slice();
    Ok(w.iter()
        .enumerate()
        .map(|(k, z)| if k == n - 1 { (z - 1.0).norm_sqr() } else { z.norm_sqr() })
        .sum())
}

pub fn sweep(problem: &ReplacementProblem, opts: &SweepOptions) -> Result<SweepReport> {
    let k = problem.count();
    let mut per_n = Vec::with_capacity(k);
    let mut energies = Vec::with_capacity(k);
    for n in 1..=k {
        per_n.push(SweepRecord {
            n,
            tilde: tilde_constants(problem, n)?,
            exact: exact_constants(problem, n)?,
            riesz: riesz_basis_test(problem, n)?,
        });
        energies.push(tail_energy(problem, n)?);
    }

    let window_start = k / 2 + 1;
    let trailing = &per_n[window_start - 1..];
    let liminf_a = trailing.iter().map(|r| r.exact.lower).fold(f64::INFINITY, f64::min);
    let limsup_b = trailing.iter().map(|r| r.exact.upper).fold(f64::NEG_INFINITY, f64::max);

    let total: f64 = energies.iter().sum();
    let late: f64 = energies[window_start - 1..].iter().sum();
    let uniform_convergence_hint = total <= opts.energy_floor || late <= opts.flatten_ratio * total;

    Ok(SweepReport {
        per_n,
        window_start,
        window_end: k,
        liminf_a,
        limsup_b,
        tail_energy: energies,
        uniform_convergence_hint,
    })
}
