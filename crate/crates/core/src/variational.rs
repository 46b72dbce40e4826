//! Frame constants of `B_N` from the extremal problem over the unit ball
//!
//! ```text
//! B_N = max_{|c| ≤ 1} ⟨U′_N c, c⟩ + (√(1 − |c|²) + √⟨U″_N c, c⟩)²
//! A_N = min_{|c| ≤ 1} ⟨U′_N c, c⟩ + (√(1 − |c|²) − √⟨U″_N c, c⟩)²
//! ```
//!
//! The ball `|c| ≤ 1` in `C^N` is parameterized by the upper hemisphere
//! `x = (Re c, Im c, s)`, `|x| = 1`, `s = √(1 − |c|²) ≥ 0`, which turns the
//! `√(1 − |c|²)` factor into a smooth coordinate. Each restart runs
//! projected gradient steps (tangent gradient, renormalization back onto
//! the sphere, reflection `s ↦ |s|`) with a Barzilai–Borwein trial step and
//! Armijo backtracking. `c = 0` has value exactly 1, so the returned upper
//! constant is always `≥ 1` and the lower one `≤ 1`.

use alloc::vec::Vec;

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::coeff::ReplacementProblem;
use crate::error::{Error, Result};
use crate::frame::{FrameConstants, FrameMethod};
use crate::gram::{gram_head, gram_tail};
use crate::matrix::HermitianMatrix;

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(default))]
pub struct VariationalOptions {
    pub restarts: usize,
    pub max_iters: usize,
    /// A restart has converged once the tangent gradient, or a step,
    /// is shorter than this.
    pub step_tol: f64,
    pub seed: u64,
}

impl Default for VariationalOptions {
    fn default() -> Self {
        Self { restarts: 64, max_iters: 2000, step_tol: 1e-10, seed: 0 }
    }
}

/// Below this `⟨U″c, c⟩` is treated as zero and `∇√⟨U″c, c⟩` is dropped.
const SQRT_GUARD: f64 = 1e-14;
const ARMIJO: f64 = 1e-4;
const MAX_BACKTRACKS: usize = 60;
const NONMONOTONE_MEMORY: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Sense {
    Max,
    Min,
}

struct Objective<'a> {
    head: &'a HermitianMatrix,
    tail: &'a HermitianMatrix,
    n: usize,
    sense: Sense,
}

impl Objective<'_> {
    fn sign(&self) -> f64 {
        match self.sense {
            Sense::Max => 1.0,
            Sense::Min => -1.0,
        }
    }

    fn coeffs(&self, x: &[f64]) -> Vec<Complex64> {
        (0..self.n).map(|k| Complex64::new(x[k], x[self.n + k])).collect()
    }

    /// `φ±(c)` at `x = (Re c, Im c, s)`.
    fn value(&self, x: &[f64]) -> f64 {
        let c = self.coeffs(x);
        let s = x[2 * self.n];
        let q1 = self.head.quadratic_form(&c);
        let t = libm::sqrt(self.tail.quadratic_form(&c).max(0.0));
        let r = s + self.sign() * t;
        q1 + r * r
    }

    /// Value and ambient gradient with respect to `x`.
    fn value_grad(&self, x: &[f64]) -> (f64, Vec<f64>) {
        let n = self.n;
        let c = self.coeffs(x);
        let s = x[2 * n];
        let uc1 = self.head.apply(&c);
        let uc2 = self.tail.apply(&c);
        let q1: f64 = c.iter().zip(&uc1).map(|(a, b)| (a.conj() * b).re).sum();
        let q2: f64 = c.iter().zip(&uc2).map(|(a, b)| (a.conj() * b).re).sum::<f64>().max(0.0);
        let t = libm::sqrt(q2);
        let sign = self.sign();
        let r = s + sign * t;

        let mut grad = alloc::vec![0.0; 2 * n + 1];
        // ∇q = 2(Re Uc, Im Uc); ∇t = ∇q2 / (2t).
        let tail_scale = if q2 > SQRT_GUARD { 2.0 * r * sign / t } else { 0.0 };
        for k in 0..n {
            grad[k] = 2.0 * uc1[k].re + tail_scale * uc2[k].re;
            grad[n + k] = 2.0 * uc1[k].im + tail_scale * uc2[k].im;
        }
        grad[2 * n] = 2.0 * r;
        (q1 + r * r, grad)
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn normalize_onto_hemisphere(x: &mut [f64]) {
    let norm = libm::sqrt(dot(x, x));
    x.iter_mut().for_each(|v| *v /= norm);
    let last = x.len() - 1;
    x[last] = x[last].abs();
}

struct RestartOutcome {
    value: f64,
    converged: bool,
}

/// Projected Barzilai–Borwein ascent on `sense`-adjusted `φ`, from `x`,
/// with a nonmonotone (max over the last few iterates) Armijo test.
fn optimize_from(obj: &Objective<'_>, mut x: Vec<f64>, opts: &VariationalOptions) -> RestartOutcome {
    // Work with h = ±φ so that both senses maximize.
    let flip = match obj.sense {
        Sense::Max => 1.0,
        Sense::Min => -1.0,
    };
    normalize_onto_hemisphere(&mut x);
    let (f0, g0) = obj.value_grad(&x);
    let mut h = flip * f0;
    let mut best = h;
    let mut g: Vec<f64> = g0.into_iter().map(|v| flip * v).collect();
    let mut step = 1.0;
    // Previous point and tangent gradient, for the BB step.
    let mut prev: Option<(Vec<f64>, Vec<f64>)> = None;
    let mut history = [h; NONMONOTONE_MEMORY];

    for iter in 0..opts.max_iters {
        // Tangent component of the gradient on the sphere.
        let radial = dot(&g, &x);
        let tangent: Vec<f64> = g.iter().zip(&x).map(|(gi, xi)| gi - radial * xi).collect();
        let tnorm2 = dot(&tangent, &tangent);
        if libm::sqrt(tnorm2) <= opts.step_tol {
            return RestartOutcome { value: flip * best, converged: true };
        }

        if let Some((px, pg)) = &prev {
            let dx: Vec<f64> = x.iter().zip(px).map(|(a, b)| a - b).collect();
            let dg: Vec<f64> = tangent.iter().zip(pg).map(|(a, b)| a - b).collect();
            let curvature = -dot(&dx, &dg);
            if curvature > 0.0 {
                step = (dot(&dx, &dx) / curvature).clamp(1e-8, 1e4);
            }
        }

        let reference = history.iter().copied().fold(f64::INFINITY, f64::min);
        let mut alpha = step;
        let mut accepted = None;
        for _ in 0..MAX_BACKTRACKS {
            let mut trial: Vec<f64> = x.iter().zip(&tangent).map(|(xi, ti)| xi + alpha * ti).collect();
            normalize_onto_hemisphere(&mut trial);
            let ht = flip * obj.value(&trial);
            if ht >= reference + ARMIJO * alpha * tnorm2 {
                let moved: f64 = trial.iter().zip(&x).map(|(a, b)| (a - b) * (a - b)).sum();
                accepted = Some((trial, libm::sqrt(moved)));
                break;
            }
            alpha *= 0.5;
        }

        let Some((next, moved)) = accepted else {
            // No ascent left at working precision.
            return RestartOutcome { value: flip * best, converged: true };
        };
        let (f_next, g_next) = obj.value_grad(&next);
        prev = Some((core::mem::replace(&mut x, next), tangent));
        g = g_next.into_iter().map(|v| flip * v).collect();
        h = flip * f_next;
        best = best.max(h);
        history[iter % NONMONOTONE_MEMORY] = h;
        if moved <= opts.step_tol {
            return RestartOutcome { value: flip * best, converged: true };
        }
    }
    RestartOutcome { value: flip * best, converged: false }
}

fn extremum(
    head: &HermitianMatrix,
    tail: &HermitianMatrix,
    sense: Sense,
    opts: &VariationalOptions,
    rng: &mut ChaCha8Rng,
) -> Result<f64> {
    let n = head.order();
    let obj = Objective { head, tail, n, sense };
    let mut best = 1.0;
    let mut any_converged = false;
    for _ in 0..opts.restarts {
        let start: Vec<f64> = (0..2 * n + 1).map(|_| StandardNormal.sample(rng)).collect();
        let out = optimize_from(&obj, start, opts);
        any_converged |= out.converged;
        best = match sense {
            Sense::Max => f64::max(best, out.value),
            Sense::Min => f64::min(best, out.value),
        };
    }
    if !any_converged {
        return Err(Error::NonConvergence { routine: "variational projected gradient", iterations: opts.max_iters });
    }
    Ok(best)
}

pub fn variational_constants(
    problem: &ReplacementProblem,
    n: usize,
    opts: &VariationalOptions,
) -> Result<FrameConstants> {
    if opts.restarts == 0 {
        return Err(Error::InvalidParameter("restarts must be at least 1".into()));
    }
    let head = gram_head(problem, n)?;
    let tail = gram_tail(problem, n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let upper = extremum(&head, &tail, Sense::Max, opts, &mut rng)?;
    let lower = extremum(&head, &tail, Sense::Min, opts, &mut rng)?;
    Ok(FrameConstants {
        lower,
        upper,
        method: FrameMethod::Variational,
        degenerate: lower <= problem.rank_tol,
    })
}
