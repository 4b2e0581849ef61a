use thiserror::Error;

/// Errors shared by every module in the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// Composition (or another boundary-sensitive operation) was given
    /// morphisms whose objects do not line up.
    #[error("boundary mismatch: {context}: expected {expected}, got {found}")]
    BoundaryMismatch {
        context: String,
        expected: String,
        found: String,
    },

    /// Two morphisms were required to be parallel (same dom and cod) and are not.
    #[error("morphisms are not parallel: {0}")]
    NotParallel(String),

    /// A family passed to a supremum/maximum operation is not directed.
    #[error("family is not directed: {0}")]
    Directedness(String),

    /// A value violates a structural invariant (duplicate labels,
    /// non-injective graph, dangling table entry, ...).
    #[error("validation failed [{code}]: {message}")]
    Validation { code: &'static str, message: String },

    /// An operation's stated precondition does not hold for the input.
    #[error("precondition failed: {0}")]
    Precondition(String),

    /// Inputs that should be mutually consistent (e.g. a cocone for a
    /// diagram) are not.
    #[error("inconsistent input: {0}")]
    Consistency(String),

    /// An iterative numerical method failed to converge.
    #[error("numerical failure: {0}")]
    Numerical(String),

    /// Matrix shapes are incompatible with the requested operation.
    #[error("shape mismatch: {0}")]
    Shape(String),

    /// An index is out of range.
    #[error("index out of range: {index} not below {bound}")]
    IndexOutOfRange { index: usize, bound: usize },

    /// A search or enumeration was asked to cover more than it can afford.
    #[error("resource bound exceeded: {0}")]
    Resource(String),

    /// `run_suite` was given a suite name it does not know.
    #[error("unknown suite: {0}")]
    UnknownSuite(String),
}

pub type Result<T> = std::result::Result<T, Error>;
