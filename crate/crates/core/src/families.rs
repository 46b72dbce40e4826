//! Deterministic instance generators.

use alloc::vec::Vec;

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::coeff::{validate_problem, CoeffVector, ReplacementProblem};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(tag = "kind", rename_all = "snake_case"))]
pub enum FamilySpec {
    /// `w_j = v_j` for `j = 1..count`.
    Identity { ambient_dim: usize, count: usize },
    /// Blocks of sizes `1, 2, ..., n_blocks`; see [`gen_block_example`].
    BlockRemark42 { n_blocks: usize },
    /// `w_j = cos θ_j·v_j + sin θ_j·v_{L+j}`.
    Rotation { thetas: Vec<f64> },
    /// `w_j = normalize(v_j + ε·g_j)` with seeded complex Gaussian `g_j`.
    RandomPerturbation { ambient_dim: usize, count: usize, epsilon: f64, seed: u64 },
}

impl FamilySpec {
    pub fn generate(&self) -> Result<ReplacementProblem> {
        match self {
            FamilySpec::Identity { ambient_dim, count } => {
                if *count == 0 || count > ambient_dim {
                    return Err(Error::InvalidParameter("identity family needs 1 ≤ count ≤ ambient_dim".into()));
                }
                Ok(gen_identity(*ambient_dim, *count))
            }
            FamilySpec::BlockRemark42 { n_blocks } => gen_block_example(*n_blocks),
            FamilySpec::Rotation { thetas } => gen_rotation(thetas),
            FamilySpec::RandomPerturbation { ambient_dim, count, epsilon, seed } => {
                gen_random_perturbation(*ambient_dim, *count, *epsilon, *seed)
            }
        }
    }
}

pub fn gen_identity(ambient_dim: usize, count: usize) -> ReplacementProblem {
    ReplacementProblem::new(ambient_dim, (1..=count).map(|k| CoeffVector::basis(ambient_dim, k)).collect())
}

/// `τ(n) = 1 + 2 + ... + n`.
pub fn tau(n: usize) -> usize {
    n * (n + 1) / 2
}

/// Block example with a non-monotone sequence of lower frame constants.
///
/// Block `n` occupies coordinates `τ(n−1)+1 ..= τ(n)`. Its first vector is
/// the flat unit vector `n^{-1/2}·Σ_k v_{τ(n−1)+k}`; the remaining `n − 1`
/// come from Gram–Schmidt on the block's standard coordinate vectors, in
/// index order, against the vectors already chosen. Every block is an
/// orthonormal basis of its span, so `M = K = τ(n_blocks)`.
pub fn gen_block_example(n_blocks: usize) -> Result<ReplacementProblem> {
    if n_blocks == 0 {
        return Err(Error::InvalidParameter("n_blocks must be at least 1".into()));
    }
    let m = tau(n_blocks);
    let mut vectors = Vec::with_capacity(m);
    for n in 1..=n_blocks {
        let offset = tau(n - 1);
        let mut block: Vec<Vec<f64>> = Vec::with_capacity(n);
        block.push(alloc::vec![1.0 / libm::sqrt(n as f64); n]);
        for e in 0..n {
            if block.len() == n {
                break;
            }
            let mut u = alloc::vec![0.0; n];
            u[e] = 1.0;
            for q in &block {
                let proj: f64 = u.iter().zip(q).map(|(a, b)| a * b).sum();
                u.iter_mut().zip(q).for_each(|(a, b)| *a -= proj * b);
            }
            let norm = libm::sqrt(u.iter().map(|x| x * x).sum::<f64>());
            if norm > 1e-8 {
                block.push(u.into_iter().map(|x| x / norm).collect());
            }
        }
        for local in block {
            let mut coeffs = alloc::vec![Complex64::new(0.0, 0.0); m];
            for (k, x) in local.into_iter().enumerate() {
                coeffs[offset + k] = Complex64::new(x, 0.0);
            }
            vectors.push(CoeffVector::new(coeffs));
        }
    }
    validate_problem(ReplacementProblem::new(m, vectors))
}

/// Rotations of `v_j` towards `v_{L+j}` by `θ_j`, with `M = 2L`.
pub fn gen_rotation(thetas: &[f64]) -> Result<ReplacementProblem> {
    let l = thetas.len();
    if l == 0 {
        return Err(Error::InvalidParameter("rotation family needs at least one angle".into()));
    }
    let m = 2 * l;
    let vectors = thetas
        .iter()
        .enumerate()
        .map(|(j, &theta)| {
            let mut coeffs = alloc::vec![Complex64::new(0.0, 0.0); m];
            coeffs[j] = Complex64::new(libm::cos(theta), 0.0);
            coeffs[l + j] = Complex64::new(libm::sin(theta), 0.0);
            CoeffVector::new(coeffs)
        })
        .collect();
    validate_problem(ReplacementProblem::new(m, vectors))
}

/// Seeded perturbations of the first `count` basis vectors.
///
/// Entries of `g_j` are `(x + iy)/√2` with `x, y` standard normal, so that
/// `E|g_jk|² = 1`.
pub fn gen_random_perturbation(ambient_dim: usize, count: usize, epsilon: f64, seed: u64) -> Result<ReplacementProblem> {
    if count == 0 || count > ambient_dim {
        return Err(Error::InvalidParameter("random perturbation needs 1 ≤ count ≤ ambient_dim".into()));
    }
    if !(0.0..1.0).contains(&epsilon) {
        return Err(Error::InvalidParameter("epsilon must lie in [0, 1)".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let scale = epsilon * core::f64::consts::FRAC_1_SQRT_2;
    let vectors = (0..count)
        .map(|j| {
            let mut coeffs: Vec<Complex64> = (0..ambient_dim)
                .map(|_| {
                    let re: f64 = StandardNormal.sample(&mut rng);
                    let im: f64 = StandardNormal.sample(&mut rng);
                    Complex64::new(scale * re, scale * im)
                })
                .collect();
            coeffs[j] += 1.0;
            let norm = libm::sqrt(coeffs.iter().map(|z| z.norm_sqr()).sum::<f64>());
            coeffs.iter_mut().for_each(|z| *z /= norm);
            CoeffVector::new(coeffs)
        })
        .collect();
    validate_problem(ReplacementProblem::new(ambient_dim, vectors))
}
