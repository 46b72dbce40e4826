//! Riesz-basis tests and optimal frame constants for orthonormal bases in
//! which the first `N` vectors are replaced by given unit vectors.
//!
//! Vectors are represented by their coefficients against the orthonormal
//! basis `v_1, v_2, ...`, truncated at an ambient dimension `M`. Every
//! replacement vector lies in `span{v_1..v_M}`, so Gram matrices,
//! projections and frame constants are computed exactly from finite data;
//! the untouched tail `v_k` (`k > M`) contributes the eigenvalue 1.
//!
//! The crate is `no_std` (with `alloc`) when built without the default
//! `std` feature. File formats and the command line live in `riesz-cli`.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod coeff;
pub mod eigen;
mod error;
pub mod exp_basis;
pub mod families;
pub mod frame;
pub mod gershgorin;
pub mod gram;
pub mod matrix;
pub mod variational;

pub use coeff::{inner, split_projections, validate_problem, CoeffVector, ComplexScalar, ReplacementProblem};
pub use error::{Error, Result};
pub use frame::{
    closed_form_n1, exact_constants, sweep, tilde_constants, FrameConstants, FrameMethod, SweepOptions, SweepRecord,
    SweepReport,
};
pub use gram::{gram_head, gram_tail, mixing_matrix, riesz_basis_test, RieszVerdict};
pub use matrix::{ComplexMatrix, HermitianMatrix};
pub use variational::{variational_constants, VariationalOptions};
