//! Gershgorin-type inclusion intervals for singular values of square
//! matrices.
//!
//! With `R_i` and `C_i` the off-diagonal absolute row and column sums and
//! `s_i = max(R_i, C_i)`:
//! - every singular value lies in `∪_i [(|a_ii| − s_i)₊, |a_ii| + s_i]`;
//! - `σ_min ≥ min_k (|a_kk| − (R_k + C_k)/2)`.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct RowColSums {
    pub row_sums: Vec<f64>,
    pub col_sums: Vec<f64>,
    pub s: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct GershgorinReport {
    pub row_sums: Vec<f64>,
    pub col_sums: Vec<f64>,
    pub s: Vec<f64>,
    /// `[lo_i, hi_i]` per row.
    pub intervals: Vec<(f64, f64)>,
    /// May be negative; reported as computed.
    pub sigma_min_lower: f64,
    pub certifies_nonsingular: bool,
}

impl GershgorinReport {
    /// Whether `x` lies in the union of the intervals, widened by `tol`.
    pub fn contains(&self, x: f64, tol: f64) -> bool {
        self.intervals.iter().any(|&(lo, hi)| x >= lo - tol && x <= hi + tol)
    }
}

fn require_square(a: &ComplexMatrix) -> Result<usize> {
    if !a.is_square() {
        return Err(Error::NotSquare { rows: a.rows(), cols: a.cols() });
    }
    Ok(a.rows())
}

pub fn row_col_sums(a: &ComplexMatrix) -> Result<RowColSums> {
    let n = require_square(a)?;
    let mut row_sums = alloc::vec![0.0; n];
    let mut col_sums = alloc::vec![0.0; n];
    for i in 0..n {
        for j in 0..n {
            if i != j {
                let m = a[(i, j)].norm();
                row_sums[i] += m;
                col_sums[j] += m;
            }
        }
    }
    let s = row_sums.iter().zip(&col_sums).map(|(r, c)| r.max(*c)).collect();
    Ok(RowColSums { row_sums, col_sums, s })
}

pub fn sigma_min_lower_bound(a: &ComplexMatrix) -> Result<f64> {
    let sums = row_col_sums(a)?;
    Ok(lower_bound_from(a, &sums))
}

fn lower_bound_from(a: &ComplexMatrix, sums: &RowColSums) -> f64 {
    (0..a.rows())
        .map(|k| a[(k, k)].norm() - 0.5 * (sums.row_sums[k] + sums.col_sums[k]))
        .fold(f64::INFINITY, f64::min)
}

pub fn singular_intervals(a: &ComplexMatrix) -> Result<GershgorinReport> {
    let sums = row_col_sums(a)?;
    let intervals = (0..a.rows())
        .map(|i| {
            let d = a[(i, i)].norm();
            ((d - sums.s[i]).max(0.0), d + sums.s[i])
        })
        .collect();
    let sigma_min_lower = lower_bound_from(a, &sums);
    Ok(GershgorinReport {
        row_sums: sums.row_sums,
        col_sums: sums.col_sums,
        s: sums.s,
        intervals,
        sigma_min_lower,
        certifies_nonsingular: sigma_min_lower > 0.0,
    })
}
