//! Exponential Riesz bases `{e^{2πi λ_n·x}}` on interval unions of `R` and
//! on the unit box of `R^d`.
//!
//! The reference orthonormal basis of `L²(D)` is the integer exponentials
//! `v_k = e^{2πi m_k·x}`, `m_k ∈ Z^d`, listed in [`BasisEnumeration`]
//! order. This is an orthonormal basis exactly when the integer translates
//! of `D` tile the line with multiplicity one (checked by
//! [`tiling_check`]) or when `D` is the unit box. The coefficient matrix
//! `m_{j,k} = ⟨e(λ_j), v_k⟩ = ∫_D e^{2πi(λ_j − m_k)·x} dx` is then known in
//! closed form, and a diagonal-dominance condition on it certifies Riesz
//! bounds through the Gershgorin-type singular-value estimates.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::gershgorin::sigma_min_lower_bound;
use crate::matrix::ComplexMatrix;

/// Tolerance for measure, overlap and tiling comparisons.
pub const DOMAIN_TOL: f64 = 1e-10;

/// Below this `|λ − m|` the per-interval integral uses its Taylor form.
pub const NEAR_RESONANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(tag = "kind", rename_all = "snake_case"))]
pub enum Domain {
    /// `[0, 1)^d`.
    UnitBox { d: usize },
    /// A finite union of half-open intervals `[α_i, β_i)` in `R`.
    IntervalUnion { intervals: Vec<(f64, f64)> },
}

impl Domain {
    pub fn unit_interval() -> Self {
        Domain::IntervalUnion { intervals: alloc::vec![(0.0, 1.0)] }
    }

    pub fn dim(&self) -> usize {
        match self {
            Domain::UnitBox { d } => *d,
            Domain::IntervalUnion { .. } => 1,
        }
    }

    /// Checks the interval list (finite, nonempty, pairwise disjoint, total
    /// measure 1) and that it tiles by integer translations.
    pub fn validate(&self) -> Result<()> {
        let intervals = match self {
            Domain::UnitBox { d } if *d >= 1 => return Ok(()),
            Domain::UnitBox { .. } => return Err(Error::InvalidParameter("unit box dimension must be positive".into())),
            Domain::IntervalUnion { intervals } => intervals,
        };
        check_intervals(intervals)?;
        let mut order: Vec<usize> = (0..intervals.len()).collect();
        order.sort_by(|&a, &b| intervals[a].0.total_cmp(&intervals[b].0));
        for pair in order.windows(2) {
            let (prev, next) = (intervals[pair[0]], intervals[pair[1]]);
            if next.0 < prev.1 - DOMAIN_TOL {
                let (first, second) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
                return Err(Error::OverlappingIntervals { first, second });
            }
        }
        if tiling_check(intervals)? {
            Ok(())
        } else {
            Err(Error::NotTiling)
        }
    }
}

fn check_intervals(intervals: &[(f64, f64)]) -> Result<()> {
    if intervals.is_empty() {
        return Err(Error::InvalidParameter("domain has no intervals".into()));
    }
    for (i, &(a, b)) in intervals.iter().enumerate() {
        if !(a.is_finite() && b.is_finite() && a < b) {
            return Err(Error::InvalidParameter(format!("interval {i} = [{a}, {b}) is not a finite nonempty interval")));
        }
    }
    Ok(())
}

/// Whether the intervals reduced modulo 1 cover `[0, 1)` exactly once, up
/// to endpoints.
pub fn tiling_check(intervals: &[(f64, f64)]) -> Result<bool> {
    check_intervals(intervals)?;
    let measure: f64 = intervals.iter().map(|(a, b)| b - a).sum();
    if (measure - 1.0).abs() > DOMAIN_TOL {
        return Err(Error::MeasureNotOne { measure });
    }
    let mut pieces = Vec::with_capacity(2 * intervals.len());
    for &(a, b) in intervals {
        let start = a - libm::floor(a);
        let end = start + (b - a);
        if end <= 1.0 + DOMAIN_TOL {
            pieces.push((start, end.min(1.0)));
        } else {
            pieces.push((start, 1.0));
            pieces.push((0.0, end - 1.0));
        }
    }
    pieces.sort_by(|x, y| x.0.total_cmp(&y.0));
    let disjoint = pieces.windows(2).all(|w| w[1].0 >= w[0].1 - DOMAIN_TOL);
    Ok(disjoint)
}

/// Enumeration `n ↦ m_n` of `Z^d`.
///
/// In one dimension the order is `0, 1, −1, 2, −2, ...`. For `d > 1` the
/// integer vectors are grouped in shells of constant max-norm `0, 1, 2, ...`
/// and ordered within a shell lexicographically by the per-axis position in
/// that one-dimensional sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BasisEnumeration {
    pub d: usize,
}

fn spiral_rank(k: i64) -> u64 {
    if k > 0 {
        2 * k as u64 - 1
    } else {
        2 * k.unsigned_abs()
    }
}

impl BasisEnumeration {
    pub fn new(d: usize) -> Self {
        Self { d }
    }

    /// The first `count` integer vectors (0-based positions `0..count`).
    pub fn first(&self, count: usize) -> Vec<Vec<i64>> {
        let mut out = Vec::with_capacity(count);
        if self.d == 1 {
            out.extend((0..count).map(|n| alloc::vec![Self::one_dim(n)]));
            return out;
        }
        let mut shell = 0i64;
        while out.len() < count {
            let mut members = shell_members(self.d, shell);
            members.sort_by(|a, b| {
                a.iter().map(|&k| spiral_rank(k)).cmp(b.iter().map(|&k| spiral_rank(k)))
            });
            out.extend(members.into_iter().take(count - out.len()));
            shell += 1;
        }
        out
    }

    /// The vector at 0-based position `n`.
    pub fn vector(&self, n: usize) -> Vec<i64> {
        if self.d == 1 {
            return alloc::vec![Self::one_dim(n)];
        }
        self.first(n + 1).pop().unwrap_or_default()
    }

    fn one_dim(n: usize) -> i64 {
        let n = n as i64;
        if n % 2 == 1 {
            (n + 1) / 2
        } else {
            -n / 2
        }
    }
}

/// All `m ∈ Z^d` with `max_i |m_i| = s`.
fn shell_members(d: usize, s: i64) -> Vec<Vec<i64>> {
    let side = (2 * s + 1) as usize;
    let total = side.pow(d as u32);
    let mut out = Vec::new();
    for idx in 0..total {
        let mut rest = idx;
        let mut m = Vec::with_capacity(d);
        for _ in 0..d {
            m.push((rest % side) as i64 - s);
            rest /= side;
        }
        if m.iter().any(|k| k.abs() == s) {
            out.push(m);
        }
    }
    out
}

/// Real frequency vectors `λ_1, λ_2, ...`, all of the same dimension.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(transparent))]
pub struct FrequencySet {
    pub lambdas: Vec<Vec<f64>>,
}

impl FrequencySet {
    pub fn new(lambdas: Vec<Vec<f64>>) -> Self {
        Self { lambdas }
    }

    /// One-dimensional frequencies.
    pub fn from_scalars(lambdas: &[f64]) -> Self {
        Self { lambdas: lambdas.iter().map(|&l| alloc::vec![l]).collect() }
    }

    pub fn len(&self) -> usize {
        self.lambdas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lambdas.is_empty()
    }

    pub fn validate(&self, dim: usize) -> Result<()> {
        for (j, l) in self.lambdas.iter().enumerate() {
            if l.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: l.len() });
            }
            if l.iter().any(|x| !x.is_finite()) {
                return Err(Error::InvalidParameter(format!("frequency {j} has a non-finite entry")));
            }
        }
        Ok(())
    }

    /// `λ_j = m_j + shift` for the first `count` enumerated integer vectors.
    pub fn shifted_integers(enumeration: &BasisEnumeration, count: usize, shift: f64) -> Self {
        Self {
            lambdas: enumeration
                .first(count)
                .into_iter()
                .map(|m| m.into_iter().map(|k| k as f64 + shift).collect())
                .collect(),
        }
    }
}

/// `x − 2·round(x/2)`, so that `π·x` is reduced modulo `2π`.
fn reduce_half_turns(x: f64) -> f64 {
    x - 2.0 * libm::round(0.5 * x)
}

/// `∫_α^β e^{2πiθx} dx = (β−α)·e^{πiθ(α+β)}·sin(πθ(β−α)) / (πθ(β−α))`.
fn segment_integral(alpha: f64, beta: f64, theta: f64) -> Complex64 {
    let len = beta - alpha;
    let phase = PI * reduce_half_turns(theta * (alpha + beta));
    let rotation = Complex64::new(libm::cos(phase), libm::sin(phase));
    let x = PI * theta * len;
    let sinc = if theta.abs() < NEAR_RESONANCE {
        let x2 = x * x;
        1.0 - x2 / 6.0 + x2 * x2 / 120.0
    } else {
        libm::sin(PI * reduce_half_turns(theta * len)) / x
    };
    rotation * (len * sinc)
}

/// `⟨e(λ), v_m⟩ = ∫_D e^{2πi(λ − m)·x} dx`.
pub fn fourier_coeff(domain: &Domain, lambda: &[f64], m: &[i64]) -> Result<Complex64> {
    let d = domain.dim();
    if lambda.len() != d {
        return Err(Error::DimensionMismatch { expected: d, found: lambda.len() });
    }
    if m.len() != d {
        return Err(Error::DimensionMismatch { expected: d, found: m.len() });
    }
    Ok(match domain {
        Domain::UnitBox { .. } => lambda
            .iter()
            .zip(m)
            .map(|(&l, &k)| segment_integral(0.0, 1.0, l - k as f64))
            .product(),
        Domain::IntervalUnion { intervals } => {
            let theta = lambda[0] - m[0] as f64;
            intervals.iter().map(|&(a, b)| segment_integral(a, b, theta)).sum()
        }
    })
}

/// `M_N[j][k] = ⟨e(λ_j), v_k⟩` for `j, k < N`.
pub fn coefficient_matrix(
    domain: &Domain,
    freqs: &FrequencySet,
    enumeration: &BasisEnumeration,
    n: usize,
) -> Result<ComplexMatrix> {
    if n == 0 || n > freqs.len() {
        return Err(Error::IndexOutOfRange { index: n, max: freqs.len() });
    }
    if enumeration.d != domain.dim() {
        return Err(Error::DimensionMismatch { expected: domain.dim(), found: enumeration.d });
    }
    freqs.validate(domain.dim())?;
    let basis = enumeration.first(n);
    let mut m = ComplexMatrix::zeros(n, n);
    for j in 0..n {
        for k in 0..n {
            m[(j, k)] = fourier_coeff(domain, &freqs.lambdas[j], &basis[k])?;
        }
    }
    Ok(m)
}

/// `Σ_{j<J} |⟨e(λ), v_j⟩|²`, which increases to `|D|` as `J → ∞`.
pub fn plancherel_partial_sum(domain: &Domain, lambda: &[f64], terms: usize) -> Result<f64> {
    let enumeration = BasisEnumeration::new(domain.dim());
    enumeration
        .first(terms)
        .iter()
        .map(|m| fourier_coeff(domain, lambda, m).map(|z| z.norm_sqr()))
        .sum()
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ExpCertificate {
    pub n: usize,
    pub a: f64,
    pub a_prime: f64,
    pub delta: f64,
    pub condition_holds: bool,
    /// `a·δ`.
    pub a_lower: f64,
    /// `a′ + a(1 − δ)`.
    pub b_upper: f64,
    /// 1-based index of the largest off-diagonal row+column sum.
    pub worst_row: usize,
    pub worst_sum: f64,
    pub diag_min: f64,
    pub diag_max: f64,
    /// `σ_min(M_N) ≥ min_k (|m_kk| − (R_k + C_k)/2)`.
    pub gershgorin_sigma_min_lower: f64,
    pub scope: String,
}

/// Off-diagonal sums `Σ_{j≠k} |m_{k,j}| + Σ_{j≠k} |m_{j,k}|` per `k`.
fn cross_sums(m: &ComplexMatrix) -> Vec<f64> {
    let n = m.rows();
    (0..n)
        .map(|k| (0..n).filter(|&j| j != k).map(|j| m[(k, j)].norm() + m[(j, k)].norm()).sum())
        .collect()
}

/// Evaluates the sufficient condition for the first `n` frequencies and
/// returns the certificate with `condition_holds` set accordingly.
///
/// Sums over `j ≤ n` grow with `n`, so a condition that holds at `n` also
/// holds at every smaller truncation; no claim is made beyond `n`.
pub fn evaluate_condition(
    domain: &Domain,
    freqs: &FrequencySet,
    n: usize,
    a: f64,
    a_prime: f64,
    delta: f64,
) -> Result<ExpCertificate> {
    if !(a > 0.0 && a <= a_prime && a_prime.is_finite()) {
        return Err(Error::InvalidParameter(format!("need 0 < a ≤ a′, got a={a}, a′={a_prime}")));
    }
    if !(delta > 0.0 && delta < 1.0) {
        return Err(Error::InvalidParameter(format!("need 0 < δ < 1, got δ={delta}")));
    }
    domain.validate()?;
    let m = coefficient_matrix(domain, freqs, &BasisEnumeration::new(domain.dim()), n)?;
    let diag: Vec<f64> = (0..n).map(|k| m[(k, k)].norm()).collect();
    let sums = cross_sums(&m);
    let (worst_idx, worst_sum) =
        sums.iter().copied().enumerate().fold((0, f64::NEG_INFINITY), |acc, (i, s)| if s > acc.1 { (i, s) } else { acc });
    let bound = 2.0 * a * (1.0 - delta);
    let diag_ok = diag.iter().all(|&x| x >= a && x <= a_prime);
    let condition_holds = diag_ok && worst_sum <= bound;
    Ok(ExpCertificate {
        n,
        a,
        a_prime,
        delta,
        condition_holds,
        a_lower: a * delta,
        b_upper: a_prime + a * (1.0 - delta),
        worst_row: worst_idx + 1,
        worst_sum,
        diag_min: diag.iter().copied().fold(f64::INFINITY, f64::min),
        diag_max: diag.iter().copied().fold(f64::NEG_INFINITY, f64::max),
        gershgorin_sigma_min_lower: sigma_min_lower_bound(&m)?,
        scope: format!("certified for all checked N <= {n}; sums are nondecreasing in N, larger N unchecked"),
    })
}

/// Like [`evaluate_condition`], but a failed condition is an error carrying
/// the offending row.
pub fn suff_basis_check(
    domain: &Domain,
    freqs: &FrequencySet,
    n: usize,
    a: f64,
    a_prime: f64,
    delta: f64,
) -> Result<ExpCertificate> {
    let cert = evaluate_condition(domain, freqs, n, a, a_prime, delta)?;
    if cert.condition_holds {
        return Ok(cert);
    }
    let m = coefficient_matrix(domain, freqs, &BasisEnumeration::new(domain.dim()), n)?;
    if let Some(k) = (0..n).find(|&k| {
        let d = m[(k, k)].norm();
        d < a || d > a_prime
    }) {
        return Err(Error::ConditionViolated {
            worst_row: k + 1,
            worst_sum: m[(k, k)].norm(),
            reason: format!("diagonal magnitude outside [{a}, {a_prime}]"),
        });
    }
    Err(Error::ConditionViolated {
        worst_row: cert.worst_row,
        worst_sum: cert.worst_sum,
        reason: format!("off-diagonal sum exceeds 2a(1-δ) = {}", 2.0 * a * (1.0 - delta)),
    })
}

/// Candidate `(a, a′, δ)` read off a coefficient matrix: the extreme
/// diagonal magnitudes and the largest `δ < 1` the off-diagonal sums allow.
/// `None` when no such `δ > 0` exists.
pub fn suggest_parameters(m: &ComplexMatrix) -> Option<(f64, f64, f64)> {
    let n = m.rows();
    if n == 0 || !m.is_square() {
        return None;
    }
    let diag: Vec<f64> = (0..n).map(|k| m[(k, k)].norm()).collect();
    let a = diag.iter().copied().fold(f64::INFINITY, f64::min);
    let a_prime = diag.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let worst = cross_sums(m).into_iter().fold(0.0, f64::max);
    if !(a > 0.0) {
        return None;
    }
    // Shave a few ulps so the condition is not decided by rounding.
    let delta = (1.0 - worst / (2.0 * a)).min(1.0 - 1e-9) * (1.0 - 1e-12);
    (delta > 0.0).then_some((a, a_prime, delta))
}

/// `√(1 + (1 − δ)²) − (1 − δ)`: the largest `a` compatible with the
/// Plancherel row identity on a domain of measure 1.
pub fn remark_feasibility_bound(delta: f64) -> f64 {
    let r = 1.0 - delta;
    libm::sqrt(1.0 + r * r) - r
}

pub fn remark_feasibility(a: f64, delta: f64) -> bool {
    a > 0.0 && a <= remark_feasibility_bound(delta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn tiling_examples() {
        assert_eq!(tiling_check(&[(0.0, 1.0)]), Ok(true));
        assert_eq!(tiling_check(&[(0.0, 0.5), (1.5, 2.0)]), Ok(true));
        assert_eq!(tiling_check(&[(0.0, 0.5), (0.25, 0.75)]), Ok(false));
        assert_eq!(tiling_check(&[(0.3, 1.3)]), Ok(true));
        assert_eq!(tiling_check(&[(-0.75, -0.5), (2.5, 3.0), (4.0, 4.25)]), Ok(true));
        assert_eq!(tiling_check(&[(-0.75, -0.5), (2.0, 2.5), (4.75, 5.0)]), Ok(false));
        assert!(matches!(tiling_check(&[(0.0, 0.5)]), Err(Error::MeasureNotOne { .. })));
    }

    #[test]
    fn domain_validation() {
        assert!(Domain::unit_interval().validate().is_ok());
        assert!(Domain::UnitBox { d: 3 }.validate().is_ok());
        assert!(Domain::UnitBox { d: 0 }.validate().is_err());
        let overlap = Domain::IntervalUnion { intervals: vec![(0.0, 0.5), (0.25, 0.75)] };
        assert_eq!(overlap.validate(), Err(Error::OverlappingIntervals { first: 0, second: 1 }));
        let no_tile = Domain::IntervalUnion { intervals: vec![(0.0, 0.5), (2.0, 2.5)] };
        assert_eq!(no_tile.validate(), Err(Error::NotTiling));
        let short = Domain::IntervalUnion { intervals: vec![(0.0, 0.9)] };
        assert!(matches!(short.validate(), Err(Error::MeasureNotOne { .. })));
    }

    #[test]
    fn one_dim_enumeration() {
        let e = BasisEnumeration::new(1);
        let first: Vec<i64> = e.first(7).into_iter().map(|m| m[0]).collect();
        assert_eq!(first, [0, 1, -1, 2, -2, 3, -3]);
        assert_eq!(e.vector(4), vec![-2]);
    }

    #[test]
    fn two_dim_enumeration_is_shell_ordered_and_injective() {
        let e = BasisEnumeration::new(2);
        let first = e.first(25);
        assert_eq!(first[0], vec![0, 0]);
        assert_eq!(&first[1..4], &[vec![0, 1], vec![0, -1], vec![1, 0]]);
        let norms: Vec<i64> = first.iter().map(|m| m.iter().map(|k| k.abs()).max().unwrap()).collect();
        assert!(norms.windows(2).all(|w| w[0] <= w[1]));
        assert_eq!(norms.iter().filter(|&&s| s <= 2).count(), 25);
        let mut sorted = first.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 25);
        assert_eq!(e.vector(24), first[24]);
    }

    #[test]
    fn coefficient_examples() {
        let d = Domain::unit_interval();
        assert!((fourier_coeff(&d, &[3.0], &[3]).unwrap() - Complex64::new(1.0, 0.0)).norm() < 1e-15);
        let half = fourier_coeff(&d, &[0.5], &[0]).unwrap();
        assert!((half - Complex64::new(0.0, 2.0 / PI)).norm() < 1e-15);
        let quarter = fourier_coeff(&d, &[0.25], &[0]).unwrap();
        let expected = (Complex64::new(0.0, 1.0) - 1.0) / Complex64::new(0.0, PI / 2.0);
        assert!((quarter - expected).norm() < 1e-15);
        assert!((quarter.norm() - 2.0 * core::f64::consts::SQRT_2 / PI).abs() < 1e-15);

        let split = Domain::IntervalUnion { intervals: vec![(0.0, 0.5), (0.5, 1.0)] };
        for (l, m) in [(0.3, 0), (2.7, -1), (-4.1, 3)] {
            let a = fourier_coeff(&d, &[l], &[m]).unwrap();
            let b = fourier_coeff(&split, &[l], &[m]).unwrap();
            assert!((a - b).norm() < 1e-15);
        }
        assert!(fourier_coeff(&d, &[0.1, 0.2], &[0]).is_err());
    }

    #[test]
    fn near_resonance_is_continuous() {
        let d = Domain::IntervalUnion { intervals: vec![(-0.25, 0.25), (1.25, 1.75)] };
        let below = fourier_coeff(&d, &[2.0 + 0.999e-9], &[2]).unwrap();
        let above = fourier_coeff(&d, &[2.0 + 1.001e-9], &[2]).unwrap();
        assert!((below - above).norm() < 1e-10);
        let exact = fourier_coeff(&d, &[2.0], &[2]).unwrap();
        assert!((exact - Complex64::new(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn integer_frequencies_give_identity() {
        for domain in [Domain::unit_interval(), Domain::IntervalUnion { intervals: vec![(0.0, 0.5), (1.5, 2.0)] }] {
            let e = BasisEnumeration::new(1);
            let freqs = FrequencySet::shifted_integers(&e, 9, 0.0);
            let m = coefficient_matrix(&domain, &freqs, &e, 9).unwrap();
            assert!(m.max_abs_diff(&ComplexMatrix::identity(9)) < 1e-12);
        }
        let e = BasisEnumeration::new(2);
        let freqs = FrequencySet::shifted_integers(&e, 9, 0.0);
        let m = coefficient_matrix(&Domain::UnitBox { d: 2 }, &freqs, &e, 9).unwrap();
        assert!(m.max_abs_diff(&ComplexMatrix::identity(9)) < 1e-12);
    }

    #[test]
    fn identity_certificate() {
        let e = BasisEnumeration::new(1);
        let freqs = FrequencySet::shifted_integers(&e, 6, 0.0);
        let cert = suff_basis_check(&Domain::unit_interval(), &freqs, 6, 1.0, 1.0, 0.999).unwrap();
        assert!(cert.condition_holds);
        assert!((cert.a_lower - 0.999).abs() < 1e-15);
        assert!((cert.b_upper - 1.001).abs() < 1e-12);
        assert!(cert.worst_sum < 1e-12);
    }

    #[test]
    fn half_shift_violates_diagonal() {
        let freqs = FrequencySet::from_scalars(&[0.5]);
        let err = suff_basis_check(&Domain::unit_interval(), &freqs, 1, 0.9, 1.0, 0.5).unwrap_err();
        match err {
            Error::ConditionViolated { worst_row, worst_sum, .. } => {
                assert_eq!(worst_row, 1);
                assert!((worst_sum - 2.0 / PI).abs() < 1e-15);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn parameter_preconditions() {
        let freqs = FrequencySet::from_scalars(&[0.0]);
        let d = Domain::unit_interval();
        assert!(evaluate_condition(&d, &freqs, 1, 0.0, 1.0, 0.5).is_err());
        assert!(evaluate_condition(&d, &freqs, 1, 1.0, 0.5, 0.5).is_err());
        assert!(evaluate_condition(&d, &freqs, 1, 0.5, 1.0, 1.0).is_err());
        assert!(evaluate_condition(&d, &freqs, 2, 0.5, 1.0, 0.5).is_err());
    }

    #[test]
    fn feasibility_examples() {
        assert!(remark_feasibility(0.99, 0.999));
        assert!((remark_feasibility_bound(0.0) - (core::f64::consts::SQRT_2 - 1.0)).abs() < 1e-15);
        // √1.9801 − 0.99
        assert!((remark_feasibility_bound(0.01) - 0.417160).abs() < 1e-6);
        assert!(!remark_feasibility(0.5, 0.01));
        assert!((remark_feasibility_bound(0.5) - 0.61803).abs() < 1e-5);
        assert!(remark_feasibility(0.3, 0.5));
        assert!(!remark_feasibility(0.0, 0.5));
    }

    #[test]
    fn plancherel_rows_approach_one() {
        let d = Domain::IntervalUnion { intervals: vec![(0.0, 0.5), (1.5, 2.0)] };
        let mut prev = 0.0;
        for terms in [1, 11, 101, 1001] {
            let s = plancherel_partial_sum(&d, &[0.37], terms).unwrap();
            assert!(s <= 1.0 + 1e-8 && s >= prev);
            prev = s;
        }
        assert!(1.0 - prev < 1e-3);
    }
}
