//! Gram matrices of the projected replacement vectors and the Riesz-basis
//! test.
//!
//! For `1 ≤ N ≤ K`:
//! - `U′_N[i][j] = ⟨p′_N(w_i), p′_N(w_j)⟩` (coordinates `1..N`),
//! - `U″_N[i][j] = ⟨p″_N(w_i), p″_N(w_j)⟩` (coordinates `N+1..M`),
//! - `U_N = U′_N + U″_N`, the Gram matrix of `w_1..w_N`,
//! - `M_N[j][k] = ⟨w_j, v_k⟩`, so that `M_N·M_N* = U′_N`.
//!
//! Replacing `v_1..v_N` by `w_1..w_N` yields a Riesz basis exactly when
//! `p′_N(w_1)..p′_N(w_N)` are linearly independent, i.e. when `U′_N` is
//! positive definite. The same condition decides frame and Riesz-sequence
//! status.

use crate::coeff::{dot, ReplacementProblem};
use crate::eigen::hermitian_eigenvalues;
use crate::error::Result;
use crate::matrix::{ComplexMatrix, HermitianMatrix};

fn gram_over(problem: &ReplacementProblem, n: usize, coords: core::ops::Range<usize>) -> Result<HermitianMatrix> {
    problem.check_n(n)?;
    let w = &problem.replacements;
    let coords = coords.start.min(problem.ambient_dim)..coords.end.min(problem.ambient_dim);
    Ok(HermitianMatrix::from_upper(n, |i, j| {
        dot(&w[i].as_slice()[coords.clone()], &w[j].as_slice()[coords.clone()])
    }))
}

/// `U′_N`.
pub fn gram_head(problem: &ReplacementProblem, n: usize) -> Result<HermitianMatrix> {
    gram_over(problem, n, 0..n)
}

/// `U″_N`.
pub fn gram_tail(problem: &ReplacementProblem, n: usize) -> Result<HermitianMatrix> {
    gram_over(problem, n, n..problem.ambient_dim)
}

/// `U_N`, the Gram matrix of `w_1..w_N` themselves.
pub fn gram_full(problem: &ReplacementProblem, n: usize) -> Result<HermitianMatrix> {
    gram_over(problem, n, 0..problem.ambient_dim)
}

/// `M_N`, the `N×N` matrix of leading coefficients.
pub fn mixing_matrix(problem: &ReplacementProblem, n: usize) -> Result<ComplexMatrix> {
    problem.check_n(n)?;
    Ok(ComplexMatrix::from_fn(n, n, |j, k| problem.replacements[j][k]))
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct RieszVerdict {
    pub is_riesz_basis: bool,
    /// Smallest eigenvalue of `U′_N`; also the lower frame constant of the
    /// projected system.
    pub lambda_min_head: f64,
    /// Number of eigenvalues of `U′_N` above `rank_tol`.
    pub rank_head: usize,
}

pub fn riesz_basis_test(problem: &ReplacementProblem, n: usize) -> Result<RieszVerdict> {
    let head = gram_head(problem, n)?;
    let eig = hermitian_eigenvalues(&head)?;
    let lambda_min_head = eig[0];
    let rank_head = eig.iter().filter(|&&x| x > problem.rank_tol).count();
    Ok(RieszVerdict { is_riesz_basis: lambda_min_head > problem.rank_tol, lambda_min_head, rank_head })
}
