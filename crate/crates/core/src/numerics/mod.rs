//! Dense complex linear algebra kernel.
//!
//! One tolerance policy serves every numerical judgment in the crate: law
//! checks default to a relative `1e-9`, rank cutoffs to a relative
//! `1e-12 * max(rows, cols)`. Both are overridable per call.

mod matrix;
mod svd;

pub use matrix::Matrix;
pub use svd::{
    approx_eq, complete_orthonormal, hermitian_eigenvalues, null_space, operator_norm, rank, svd,
    svd_full, FullSvd, SvdResult,
};
