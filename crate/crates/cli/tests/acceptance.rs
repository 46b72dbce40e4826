//! Acceptance checks. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails.
//!
//! Run with `cargo test -p riesz-cli --test acceptance`.

use std::f64::consts::FRAC_1_SQRT_2;
use std::process::{Command, ExitCode};
use std::time::Instant;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use riesz_core::eigen::{hermitian_eigenvalues, singular_values};
use riesz_core::exp_basis::{
    coefficient_matrix, evaluate_condition, fourier_coeff, suggest_parameters, BasisEnumeration, Domain,
    FrequencySet,
};
use riesz_core::families::{gen_block_example, gen_random_perturbation, gen_rotation, tau};
use riesz_core::gershgorin::singular_intervals;
use riesz_core::{
    closed_form_n1, exact_constants, gram_head, riesz_basis_test, sweep, tilde_constants, validate_problem,
    variational_constants, CoeffVector, ComplexMatrix, ReplacementProblem, SweepOptions, VariationalOptions,
};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn complex_normal(rng: &mut ChaCha8Rng) -> Complex64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex64::new(re, im)
}

fn normalized(mut v: Vec<Complex64>) -> CoeffVector {
    let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    v.iter_mut().for_each(|z| *z /= norm);
    CoeffVector::new(v)
}

/// 100 seeded instances with `N ≤ 6`, `M ≤ 12`: dense random unit vectors,
/// small and large perturbations of `v_j`, and rotations.
fn random_instances() -> Vec<ReplacementProblem> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    (0..100)
        .map(|i| {
            let m = rng.random_range(2..=12usize);
            let k = rng.random_range(1..=m.min(6));
            let problem = match i % 4 {
                0 => {
                    let vectors = (0..k).map(|_| normalized((0..m).map(|_| complex_normal(&mut rng)).collect())).collect();
                    validate_problem(ReplacementProblem::new(m, vectors))
                }
                1 => gen_random_perturbation(m, k, rng.random_range(0.01..0.3), rng.random()),
                2 => gen_random_perturbation(m, k, rng.random_range(0.3..0.95), rng.random()),
                _ => {
                    let l = rng.random_range(1..=6usize);
                    let thetas: Vec<f64> = (0..l).map(|_| rng.random_range(0.0..1.4)).collect();
                    gen_rotation(&thetas)
                }
            };
            problem.expect("generated instance is valid")
        })
        .collect()
}

fn c1_closed_form_n1() -> Outcome {
    let p = ReplacementProblem::new(2, vec![CoeffVector::from_real(&[FRAC_1_SQRT_2, FRAC_1_SQRT_2])]);
    let exact = exact_constants(&p, 1).map_err(|e| e.to_string())?;
    let closed = closed_form_n1(&p).map_err(|e| e.to_string())?;
    let var = variational_constants(&p, 1, &VariationalOptions::default()).map_err(|e| e.to_string())?;
    let (a, b) = (1.0 - FRAC_1_SQRT_2, 1.0 + FRAC_1_SQRT_2);
    ensure((exact.lower - a).abs() <= 1e-9 && (exact.upper - b).abs() <= 1e-9, || {
        format!("exact ({}, {}) != ({a}, {b})", exact.lower, exact.upper)
    })?;
    ensure((closed.lower - a).abs() <= 1e-9 && (closed.upper - b).abs() <= 1e-9, || {
        format!("closed form ({}, {}) != ({a}, {b})", closed.lower, closed.upper)
    })?;
    ensure((var.lower - a).abs() <= 1e-6 && (var.upper - b).abs() <= 1e-6, || {
        format!("variational ({}, {}) != ({a}, {b})", var.lower, var.upper)
    })?;
    ensure((exact.lower - 0.5).abs() > 0.1 && (exact.upper - 1.5).abs() > 0.1, || {
        "constants coincide with (0.5, 1.5)".into()
    })?;
    Ok(format!(
        "(A, B) = ({:.9}, {:.9}); variational ({:.9}, {:.9}); differs from (0.5, 1.5)",
        exact.lower, exact.upper, var.lower, var.upper
    ))
}

fn c2_tilde_identity(instances: &[ReplacementProblem]) -> Outcome {
    let mut worst = 0.0f64;
    let mut checks = 0;
    for (i, p) in instances.iter().enumerate() {
        for n in 1..=p.count() {
            let tilde = tilde_constants(p, n).map_err(|e| e.to_string())?;
            let ev = hermitian_eigenvalues(&gram_head(p, n).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
            let (lmin, lmax) = (ev[0], ev[ev.len() - 1]);
            let lower_err = if tilde.degenerate { lmin.max(0.0) } else { (tilde.lower - lmin).abs() };
            let upper_err = (tilde.upper - lmax.max(1.0)).abs();
            worst = worst.max(lower_err).max(upper_err);
            ensure(lower_err <= 1e-10 && upper_err <= 1e-10, || {
                format!("instance {i}, N={n}: tilde ({}, {}) vs λ ({lmin}, {lmax})", tilde.lower, tilde.upper)
            })?;
            checks += 1;
        }
    }
    Ok(format!("{checks} (instance, N) pairs, max deviation {worst:.2e}"))
}

fn c3_variational(instances: &[ReplacementProblem]) -> Outcome {
    let opts = VariationalOptions::default();
    let mut worst = 0.0f64;
    for (i, p) in instances.iter().enumerate() {
        let n = p.count();
        let exact = exact_constants(p, n).map_err(|e| e.to_string())?;
        let var = variational_constants(p, n, &opts).map_err(|e| format!("instance {i}: {e}"))?;
        let err = (var.lower - exact.lower).abs().max((var.upper - exact.upper).abs());
        worst = worst.max(err);
        ensure(err <= 1e-6, || {
            format!("instance {i}, N={n}: variational ({}, {}) vs exact ({}, {})", var.lower, var.upper, exact.lower, exact.upper)
        })?;
    }
    Ok(format!("{} instances, max deviation {worst:.2e}", instances.len()))
}

fn c4_monotone(instances: &[ReplacementProblem]) -> Outcome {
    let block = gen_block_example(4).map_err(|e| e.to_string())?;
    let mut count = 0;
    for (i, p) in instances.iter().chain(std::iter::once(&block)).enumerate() {
        let mut prev = f64::NEG_INFINITY;
        for n in 1..=p.count() {
            let b = tilde_constants(p, n).map_err(|e| e.to_string())?.upper;
            ensure(b >= prev, || format!("instance {i}: tilde B drops from {prev} to {b} at N={n}"))?;
            prev = b;
        }
        count += 1;
    }
    Ok(format!("tilde B nondecreasing on {count} instances"))
}

fn c5_equivalence(instances: &[ReplacementProblem]) -> Outcome {
    let s = FRAC_1_SQRT_2;
    let degenerate = [
        // w_1 = v_2: zero head projection at N = 1.
        (ReplacementProblem::new(3, vec![CoeffVector::basis(3, 2)]), 1),
        // Head projections of w_1 and w_2 are both multiples of e_1.
        (
            ReplacementProblem::new(4, vec![CoeffVector::from_real(&[s, 0.0, s, 0.0]), CoeffVector::from_real(&[s, 0.0, 0.0, s])]),
            2,
        ),
        // Complex collinear heads: w_2' = i·w_1'.
        (
            ReplacementProblem::new(
                4,
                vec![
                    CoeffVector::new(vec![Complex64::new(0.6, 0.0), Complex64::new(0.0, 0.0), Complex64::new(0.8, 0.0), Complex64::new(0.0, 0.0)]),
                    CoeffVector::new(vec![Complex64::new(0.0, 0.6), Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0), Complex64::new(0.8, 0.0)]),
                ],
            ),
            2,
        ),
        // Rotation by π/2 sends v_1 to v_2 entirely.
        (gen_rotation(&[std::f64::consts::FRAC_PI_2]).map_err(|e| e.to_string())?, 1),
    ];
    for (i, (p, n)) in degenerate.iter().enumerate() {
        let p = validate_problem(p.clone()).map_err(|e| e.to_string())?;
        let verdict = riesz_basis_test(&p, *n).map_err(|e| e.to_string())?;
        let exact = exact_constants(&p, *n).map_err(|e| e.to_string())?;
        ensure(!verdict.is_riesz_basis && exact.lower <= 1e-8, || {
            format!("degenerate case {i}: test {} with A = {}", verdict.is_riesz_basis, exact.lower)
        })?;
    }
    let mut full = 0;
    for (i, p) in instances.iter().enumerate() {
        for n in 1..=p.count() {
            let verdict = riesz_basis_test(p, n).map_err(|e| e.to_string())?;
            let exact = exact_constants(p, n).map_err(|e| e.to_string())?;
            ensure(verdict.is_riesz_basis == (exact.lower > 1e-8), || {
                format!("instance {i}, N={n}: test {} but A = {}", verdict.is_riesz_basis, exact.lower)
            })?;
            if verdict.is_riesz_basis {
                full += 1;
            }
        }
    }
    Ok(format!("{} degenerate cases rejected; {full} full-rank cases accepted with A > 0", degenerate.len()))
}

fn c6_block_example() -> Outcome {
    let p = gen_block_example(4).map_err(|e| e.to_string())?;
    let report = sweep(&p, &SweepOptions::default()).map_err(|e| e.to_string())?;
    let lower: Vec<f64> = report.per_n.iter().map(|r| r.exact.lower).collect();
    let mut at = Vec::new();
    for n in 1..=4 {
        let idx = tau(n - 1) + 1;
        let a = lower[idx - 1];
        ensure(a <= 1.0 / n as f64 + 1e-9, || format!("A at N={idx} is {a} > 1/{n}"))?;
        at.push(format!("A_{idx}={a:.4}"));
    }
    let non_monotone = lower.windows(2).any(|w| w[1] > w[0] + 1e-9) && lower.windows(2).any(|w| w[1] < w[0] - 1e-9);
    ensure(non_monotone, || format!("A_N sequence is monotone: {lower:?}"))?;
    Ok(format!("{}; A_N non-monotone", at.join(", ")))
}

fn c7_gershgorin() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut certified = 0;
    for t in 0..200 {
        let n = rng.random_range(1..=8usize);
        let diag_boost = if t % 2 == 0 { 0.0 } else { rng.random_range(1.0..6.0) };
        let a = ComplexMatrix::from_fn(n, n, |i, j| {
            let z = complex_normal(&mut rng);
            if i == j {
                z + diag_boost
            } else {
                z
            }
        });
        let report = singular_intervals(&a).map_err(|e| e.to_string())?;
        let sv = singular_values(&a).map_err(|e| e.to_string())?;
        for &s in &sv {
            ensure(report.contains(s, 1e-10), || format!("matrix {t}: σ = {s} outside {:?}", report.intervals))?;
        }
        let smin = sv[sv.len() - 1];
        ensure(report.sigma_min_lower <= smin + 1e-10, || {
            format!("matrix {t}: lower bound {} > σ_min {smin}", report.sigma_min_lower)
        })?;
        if report.certifies_nonsingular {
            certified += 1;
        }
    }
    Ok(format!("200 matrices contained; {certified} certified nonsingular"))
}

fn c8_exp_certificate() -> Outcome {
    let domain = Domain::unit_interval();
    let enumeration = BasisEnumeration::new(1);
    let n = 8;
    let integers = FrequencySet::shifted_integers(&enumeration, n, 0.0);
    let m = coefficient_matrix(&domain, &integers, &enumeration, n).map_err(|e| e.to_string())?;
    let dev = m.max_abs_diff(&ComplexMatrix::identity(n));
    ensure(dev <= 1e-12, || format!("integer frequencies: |M − I| = {dev}"))?;
    let (a, a_prime, delta) = (0.9, 1.0, 0.4);
    let cert = evaluate_condition(&domain, &integers, n, a, a_prime, delta).map_err(|e| e.to_string())?;
    ensure(cert.condition_holds, || "condition fails for integer frequencies".into())?;
    ensure((cert.a_lower - a * delta).abs() <= 1e-15 && (cert.b_upper - (a_prime + a * (1.0 - delta))).abs() <= 1e-15, || {
        format!("certificate bounds ({}, {})", cert.a_lower, cert.b_upper)
    })?;

    let shifted = FrequencySet::shifted_integers(&enumeration, n, 0.05);
    let m = coefficient_matrix(&domain, &shifted, &enumeration, n).map_err(|e| e.to_string())?;
    let (a, a_prime, delta) = suggest_parameters(&m).ok_or("no admissible parameters for shifted frequencies")?;
    let cert = evaluate_condition(&domain, &shifted, n, a, a_prime, delta).map_err(|e| e.to_string())?;
    ensure(cert.condition_holds, || "condition fails for suggested parameters".into())?;
    let sv = singular_values(&m).map_err(|e| e.to_string())?;
    let lambda_min = sv[n - 1] * sv[n - 1];
    ensure(cert.a_lower <= lambda_min, || {
        format!("A_lower = {} exceeds λ_min(M M*) = {lambda_min}", cert.a_lower)
    })?;
    Ok(format!(
        "M = I for integers; shifted by 0.05: A_lower = {:.6} ≤ λ_min(M M*) = {lambda_min:.6}",
        cert.a_lower
    ))
}

/// Adaptive Simpson for a complex integrand.
fn simpson<F: Fn(f64) -> Complex64>(f: &F, a: f64, b: f64, tol: f64) -> Complex64 {
    fn step<F: Fn(f64) -> Complex64>(
        f: &F,
        a: f64,
        b: f64,
        fa: Complex64,
        fm: Complex64,
        fb: Complex64,
        whole: Complex64,
        tol: f64,
        depth: u32,
    ) -> Complex64 {
        let m = 0.5 * (a + b);
        let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
        let (flm, frm) = (f(lm), f(rm));
        let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
        let delta = left + right - whole;
        if depth == 0 || delta.norm() <= 15.0 * tol {
            return left + right + delta / 15.0;
        }
        step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) + step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)
    }
    let (fa, fm, fb) = (f(a), f(0.5 * (a + b)), f(b));
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    step(f, a, b, fa, fm, fb, whole, tol, 40)
}

fn c9_fourier_accuracy() -> Outcome {
    let domains = [
        Domain::unit_interval(),
        Domain::IntervalUnion { intervals: vec![(0.0, 0.25), (1.5, 1.75), (-0.75, -0.5), (2.75, 3.0)] },
        Domain::IntervalUnion { intervals: vec![(-0.3, 0.2), (3.2, 3.7)] },
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut worst = 0.0f64;
    let mut near = 0;
    for t in 0..100 {
        let domain = &domains[t % domains.len()];
        let m: i64 = rng.random_range(-12..=12);
        let lambda = match t % 5 {
            0 => m as f64 + rng.random_range(-1e-10..=1e-10),
            1 => m as f64 + rng.random_range(-1e-8..=1e-8),
            _ => rng.random_range(-15.0..15.0),
        };
        if (lambda - m as f64).abs() <= 1e-10 {
            near += 1;
        }
        let closed = fourier_coeff(domain, &[lambda], &[m]).map_err(|e| e.to_string())?;
        let theta = lambda - m as f64;
        let integrand = |x: f64| {
            let phase = 2.0 * std::f64::consts::PI * theta * x;
            Complex64::new(phase.cos(), phase.sin())
        };
        let intervals = match domain {
            Domain::UnitBox { .. } => vec![(0.0, 1.0)],
            Domain::IntervalUnion { intervals } => intervals.clone(),
        };
        let quad: Complex64 = intervals.iter().map(|&(a, b)| simpson(&integrand, a, b, 1e-14)).sum();
        let err = (closed - quad).norm();
        worst = worst.max(err);
        ensure(err <= 1e-10, || format!("λ={lambda}, m={m}: closed {closed} vs quadrature {quad}"))?;
    }
    Ok(format!("100 pairs ({near} with |λ−m| ≤ 1e-10), max deviation {worst:.2e}"))
}

fn c10_cli_determinism() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let bin = env!("CARGO_BIN_EXE_riesz");
    let family = dir.path().join("family.json");
    std::fs::write(&family, r#"{"kind":"random_perturbation","ambient_dim":8,"count":4,"epsilon":0.4,"seed":11}"#)
        .map_err(|e| e.to_string())?;
    let problem = dir.path().join("problem.json");
    let run = |args: &[&str]| -> Result<Vec<u8>, String> {
        let out = Command::new(bin).args(args).arg("--quiet").output().map_err(|e| e.to_string())?;
        if !out.status.success() {
            return Err(format!("{args:?} exited with {}: {}", out.status, String::from_utf8_lossy(&out.stderr)));
        }
        Ok(out.stdout)
    };
    std::fs::write(&problem, run(&["gen", "--input", family.to_str().unwrap()])?).map_err(|e| e.to_string())?;
    let p = problem.to_str().unwrap();
    let cases: [&[&str]; 3] = [
        &["analyze", "--input", p, "--seed", "3", "--restarts", "16"],
        &["sweep", "--input", p, "--format", "csv"],
        &["sweep", "--input", p],
    ];
    let mut bytes = 0;
    for args in cases {
        let first = run(args)?;
        let second = run(args)?;
        ensure(!first.is_empty() && first == second, || format!("{args:?}: outputs differ"))?;
        bytes += first.len();
    }
    Ok(format!("3 configurations byte-identical across runs ({bytes} bytes)"))
}

fn main() -> ExitCode {
    let instances = random_instances();
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome + '_>)> = vec![
        ("1 closed form at N=1", Box::new(c1_closed_form_n1)),
        ("2 tilde constants vs eigenvalues of M M*", Box::new(|| c2_tilde_identity(&instances))),
        ("3 variational vs eigen oracle", Box::new(|| c3_variational(&instances))),
        ("4 tilde B monotone in N", Box::new(|| c4_monotone(&instances))),
        ("5 Riesz test vs positive lower constant", Box::new(|| c5_equivalence(&instances))),
        ("6 block example", Box::new(c6_block_example)),
        ("7 Gershgorin containment", Box::new(c7_gershgorin)),
        ("8 exponential certificate", Box::new(c8_exp_certificate)),
        ("9 Fourier coefficient accuracy", Box::new(c9_fourier_accuracy)),
        ("10 CLI determinism", Box::new(c10_cli_determinism)),
    ];
    let mut failed = 0;
    for (name, check) in &criteria {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {name}: {detail} [{secs:.2}s]"),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {name}: {detail} [{secs:.2}s]");
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
