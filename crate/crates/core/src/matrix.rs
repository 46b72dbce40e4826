//! Small dense complex matrices.

use alloc::vec::Vec;
use core::ops::{Index, IndexMut};

use num_complex::Complex64;

use crate::error::{Error, Result};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Row-major dense complex matrix.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: alloc::vec![ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = ONE;
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    /// Builds a matrix from rows; all rows must have the same length.
    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch { expected: cols, found: bad.len() });
        }
        Ok(Self { rows: rows.len(), cols, data: rows.iter().flatten().copied().collect() })
    }

    pub fn from_real_rows(rows: &[&[f64]]) -> Result<Self> {
        let rows: Vec<Vec<Complex64>> =
            rows.iter().map(|r| r.iter().map(|&x| Complex64::new(x, 0.0)).collect()).collect();
        Self::from_rows(&rows)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Complex64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Complex64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, found: other.rows });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == ZERO {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        Ok(out)
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Largest entrywise modulus of `self − other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.data.iter().zip(&other.data).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;

    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.cols + j]
    }
}

/// A square matrix with `a_ij = conj(a_ji)` and a real diagonal.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(try_from = "ComplexMatrix", into = "ComplexMatrix"))]
pub struct HermitianMatrix(ComplexMatrix);

impl HermitianMatrix {
    /// Absolute Hermitian tolerance is `1e-12 · max(1, max|a_ij|)`.
    pub const TOL: f64 = 1e-12;

    /// Validates and symmetrizes: the stored matrix is `(A + A*)/2` with an
    /// exactly real diagonal.
    pub fn new(m: ComplexMatrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::NotSquare { rows: m.rows, cols: m.cols });
        }
        let tol = Self::TOL * m.max_abs().max(1.0);
        let n = m.rows;
        for i in 0..n {
            for j in i..n {
                let deviation = (m[(i, j)] - m[(j, i)].conj()).norm();
                if !(deviation <= tol) {
                    return Err(Error::NotHermitian { row: i, col: j, deviation });
                }
            }
        }
        let mut sym = m;
        for i in 0..n {
            sym[(i, i)] = Complex64::new(sym[(i, i)].re, 0.0);
            for j in i + 1..n {
                let avg = (sym[(i, j)] + sym[(j, i)].conj()) * 0.5;
                sym[(i, j)] = avg;
                sym[(j, i)] = avg.conj();
            }
        }
        Ok(Self(sym))
    }

    /// Builds the matrix from its upper triangle `(i ≤ j)`.
    pub fn from_upper(n: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut m = ComplexMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Complex64::new(f(i, i).re, 0.0);
            for j in i + 1..n {
                let z = f(i, j);
                m[(i, j)] = z;
                m[(j, i)] = z.conj();
            }
        }
        Self(m)
    }

    pub fn order(&self) -> usize {
        self.0.rows
    }

    pub fn as_matrix(&self) -> &ComplexMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.0
    }

    pub fn diagonal(&self) -> Vec<f64> {
        (0..self.order()).map(|i| self.0[(i, i)].re).collect()
    }

    /// `Σ_ij conj(c_i) a_ij c_j`, real for a Hermitian matrix.
    pub fn quadratic_form(&self, c: &[Complex64]) -> f64 {
        let n = self.order();
        let mut acc = 0.0;
        for i in 0..n {
            let row: Complex64 = (0..n).map(|j| self.0[(i, j)] * c[j]).sum();
            acc += (c[i].conj() * row).re;
        }
        acc
    }

    /// `A·c`.
    pub fn apply(&self, c: &[Complex64]) -> Vec<Complex64> {
        let n = self.order();
        (0..n).map(|i| (0..n).map(|j| self.0[(i, j)] * c[j]).sum()).collect()
    }
}

impl TryFrom<ComplexMatrix> for HermitianMatrix {
    type Error = Error;

    fn try_from(m: ComplexMatrix) -> Result<Self> {
        Self::new(m)
    }
}

impl From<HermitianMatrix> for ComplexMatrix {
    fn from(h: HermitianMatrix) -> Self {
        h.0
    }
}

impl Index<(usize, usize)> for HermitianMatrix {
    type Output = Complex64;

    fn index(&self, idx: (usize, usize)) -> &Complex64 {
        &self.0[idx]
    }
}
