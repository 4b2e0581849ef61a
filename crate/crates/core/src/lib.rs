//! A desk-scale laboratory for the functor from finite partial injections to
//! finite-dimensional complex Hilbert spaces.
//!
//! - [`pinj`]: the exact category of finite sets and partial injections.
//! - [`numerics`]: dense complex matrices and the in-repo Jacobi SVD.
//! - [`hilb`]: finite-dimensional Hilbert spaces and operator predicates.
//! - [`ltwo`]: the functor itself and its preservation laws.
//! - [`factorize`]: polar decomposition, partial-isometry factorization, and
//!   essential fullness.
//! - [`inversecat`]: finite inverse categories and the Wagner-Preston
//!   embedding.
//! - [`lawlab`]: executable counterexamples and the seeded property suites.
//!
//! The numerical modules are generic over the real scalar (see
//! [`scalar::Scalar`]); `f64` is the working precision of the CLI and the
//! test suites, with [`Matrix64`] as the concrete alias.

pub mod error;
pub mod factorize;
pub mod hilb;
pub mod inversecat;
pub mod lawlab;
pub mod ltwo;
pub mod numerics;
pub mod pinj;
pub mod scalar;

pub use error::{Error, Result};
pub use numerics::Matrix;

/// Double-precision matrix, the working type of the CLI and suites.
pub type Matrix64 = Matrix<f64>;
/// Single-precision matrix.
pub type Matrix32 = Matrix<f32>;
