//! Dense Hermitian eigenvalues by cyclic complex Jacobi rotations.
//!
//! The matrices handled by this crate are small (tens of rows), where
//! Jacobi is both simple and accurate to a few ulps of `‖H‖`.

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::{ComplexMatrix, HermitianMatrix};

const MAX_SWEEPS: usize = 100;

/// All eigenvalues of `h`, ascending.
pub fn hermitian_eigenvalues(h: &HermitianMatrix) -> Result<Vec<f64>> {
    let n = h.order();
    let mut a = h.as_matrix().clone();
    if n <= 1 {
        return Ok((0..n).map(|i| a[(i, i)].re).collect());
    }
    let scale = a.max_abs();
    if scale == 0.0 {
        return Ok(alloc::vec![0.0; n]);
    }

    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[(i, j)].norm_sqr())
            .sum();
        if libm::sqrt(off) <= f64::EPSILON * 1e-2 * scale {
            converged = true;
            break;
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                rotate(&mut a, p, q);
            }
        }
    }
    if !converged {
        return Err(Error::NonConvergence { routine: "hermitian jacobi", iterations: MAX_SWEEPS });
    }

    let mut eig: Vec<f64> = (0..n).map(|i| a[(i, i)].re).collect();
    eig.sort_by(f64::total_cmp);
    Ok(eig)
}

/// Annihilates `a[p][q]` with the unitary `J = diag(1, conj(g))·R(θ)`
/// acting on coordinates `(p, q)`, where `g = a_pq / |a_pq|`.
fn rotate(a: &mut ComplexMatrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    let r = apq.norm();
    if r == 0.0 {
        return;
    }
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    // Skip entries that no longer change the diagonal at working precision.
    if app.abs() + 1e3 * r == app.abs() && aqq.abs() + 1e3 * r == aqq.abs() {
        a[(p, q)] = Complex64::new(0.0, 0.0);
        a[(q, p)] = Complex64::new(0.0, 0.0);
        return;
    }
    let g = apq / r;
    let theta = (aqq - app) / (2.0 * r);
    let t = if theta.is_infinite() {
        0.0
    } else {
        let t = 1.0 / (theta.abs() + libm::sqrt(theta * theta + 1.0));
        if theta < 0.0 {
            -t
        } else {
            t
        }
    };
    let c = 1.0 / libm::sqrt(t * t + 1.0);
    let s = t * c;
    let gc = g.conj();
    let n = a.rows();

    // A ← A·J
    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * c - akq * gc * s;
        a[(k, q)] = akp * s + akq * gc * c;
    }
    // A ← J*·A
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = apk * c - aqk * g * s;
        a[(q, k)] = apk * s + aqk * g * c;
    }
    a[(p, q)] = Complex64::new(0.0, 0.0);
    a[(q, p)] = Complex64::new(0.0, 0.0);
    a[(p, p)] = Complex64::new(a[(p, p)].re, 0.0);
    a[(q, q)] = Complex64::new(a[(q, q)].re, 0.0);
}

/// `(λ_min, λ_max)` of a Hermitian matrix.
pub fn hermitian_eigen_range(h: &HermitianMatrix) -> Result<(f64, f64)> {
    let eig = hermitian_eigenvalues(h)?;
    match (eig.first(), eig.last()) {
        (Some(&lo), Some(&hi)) => Ok((lo, hi)),
        _ => Err(Error::InvalidParameter("empty matrix has no eigenvalues".into())),
    }
}

/// Singular values of `a`, descending, as square roots of the eigenvalues
/// of `A*A` (negative rounding residue is clamped to zero).
pub fn singular_values(a: &ComplexMatrix) -> Result<Vec<f64>> {
    let gram = HermitianMatrix::new(a.adjoint().matmul(a)?)?;
    let mut sv: Vec<f64> = hermitian_eigenvalues(&gram)?.into_iter().map(|x| libm::sqrt(x.max(0.0))).collect();
    sv.reverse();
    Ok(sv)
}
