//! Coefficient representation of vectors against the orthonormal basis `V`.
//!
//! A vector `w` is stored as `(⟨w, v_1⟩, ..., ⟨w, v_M⟩)`. Inner products are
//! linear in the first argument and conjugate-linear in the second.

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::error::{Error, Result};

pub type ComplexScalar = Complex64;

pub const DEFAULT_UNIT_TOL: f64 = 1e-10;
pub const DEFAULT_RANK_TOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(transparent))]
pub struct CoeffVector(Vec<ComplexScalar>);

impl CoeffVector {
    pub fn new(coeffs: Vec<ComplexScalar>) -> Self {
        Self(coeffs)
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Self(coeffs.iter().map(|&re| Complex64::new(re, 0.0)).collect())
    }

    /// The basis vector `v_k` (1-based) in dimension `dim`.
    pub fn basis(dim: usize, k: usize) -> Self {
        let mut coeffs = alloc::vec![Complex64::new(0.0, 0.0); dim];
        coeffs[k - 1] = Complex64::new(1.0, 0.0);
        Self(coeffs)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[ComplexScalar] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<ComplexScalar> {
        self.0
    }

    pub fn norm_sqr(&self) -> f64 {
        self.0.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        libm::sqrt(self.norm_sqr())
    }

    /// Coordinates `1..=n`, i.e. the projection onto `span{v_1..v_n}`.
    pub fn head(&self, n: usize) -> &[ComplexScalar] {
        &self.0[..n.min(self.0.len())]
    }

    /// Coordinates `n+1..=M`, i.e. the projection onto the complement.
    pub fn tail(&self, n: usize) -> &[ComplexScalar] {
        &self.0[n.min(self.0.len())..]
    }
}

impl core::ops::Index<usize> for CoeffVector {
    type Output = ComplexScalar;

    fn index(&self, index: usize) -> &ComplexScalar {
        &self.0[index]
    }
}

/// `Σ_k u_k · conj(v_k)` over two coefficient slices of equal length.
pub(crate) fn dot(u: &[ComplexScalar], v: &[ComplexScalar]) -> ComplexScalar {
    u.iter().zip(v).map(|(a, b)| a * b.conj()).sum()
}

pub fn inner(u: &CoeffVector, v: &CoeffVector) -> Result<ComplexScalar> {
    if u.len() != v.len() {
        return Err(Error::DimensionMismatch { expected: u.len(), found: v.len() });
    }
    Ok(dot(u.as_slice(), v.as_slice()))
}

/// Splits `w` into its head `p′_N(w)` (length `N`) and tail `p″_N(w)`
/// (length `M − N`).
pub fn split_projections(w: &CoeffVector, n: usize) -> Result<(CoeffVector, CoeffVector)> {
    if n == 0 || n > w.len() {
        return Err(Error::IndexOutOfRange { index: n, max: w.len() });
    }
    Ok((CoeffVector(w.head(n).to_vec()), CoeffVector(w.tail(n).to_vec())))
}

/// A replacement instance: ambient dimension `M`, the vectors
/// `w_1..w_K`, and the tolerances used by validation and rank decisions.
#[derive(Debug, Clone, PartialEq)]
pub struct ReplacementProblem {
    pub ambient_dim: usize,
    pub replacements: Vec<CoeffVector>,
    pub unit_tol: f64,
    pub rank_tol: f64,
}

impl ReplacementProblem {
    /// Builds an unvalidated problem with default tolerances.
    pub fn new(ambient_dim: usize, replacements: Vec<CoeffVector>) -> Self {
        Self { ambient_dim, replacements, unit_tol: DEFAULT_UNIT_TOL, rank_tol: DEFAULT_RANK_TOL }
    }

    pub fn with_tolerances(mut self, unit_tol: f64, rank_tol: f64) -> Self {
        self.unit_tol = unit_tol;
        self.rank_tol = rank_tol;
        self
    }

    /// Number of replacement vectors `K`.
    pub fn count(&self) -> usize {
        self.replacements.len()
    }

    pub fn vector(&self, j: usize) -> &CoeffVector {
        &self.replacements[j]
    }

    /// Checks `1 ≤ n ≤ K`.
    pub fn check_n(&self, n: usize) -> Result<()> {
        if n == 0 || n > self.count() {
            return Err(Error::IndexOutOfRange { index: n, max: self.count() });
        }
        Ok(())
    }
}

pub fn validate_problem(raw: ReplacementProblem) -> Result<ReplacementProblem> {
    let m = raw.ambient_dim;
    if !(raw.unit_tol.is_finite() && raw.unit_tol >= 0.0 && raw.rank_tol.is_finite() && raw.rank_tol >= 0.0) {
        return Err(Error::InvalidParameter(alloc::format!(
            "tolerances must be finite and nonnegative (unit_tol={}, rank_tol={})",
            raw.unit_tol,
            raw.rank_tol
        )));
    }
    if m == 0 {
        return Err(Error::InvalidParameter("ambient dimension must be positive".into()));
    }
    if raw.replacements.is_empty() {
        return Err(Error::NoReplacements);
    }
    for (j, w) in raw.replacements.iter().enumerate() {
        if let Some(coord) = w.as_slice().iter().position(|z| !(z.re.is_finite() && z.im.is_finite())) {
            return Err(Error::NonFiniteEntry { index: j + 1, coord: coord + 1 });
        }
        if w.len() != m {
            return Err(Error::DimensionMismatch { expected: m, found: w.len() });
        }
    }
    if raw.count() > m {
        return Err(Error::TooManyReplacements { count: raw.count(), ambient_dim: m });
    }
    for (j, w) in raw.replacements.iter().enumerate() {
        let norm_sq = w.norm_sqr();
        if (norm_sq - 1.0).abs() > raw.unit_tol {
            return Err(Error::NonUnitVector { index: j + 1, norm_sq });
        }
    }
    Ok(raw)
}
