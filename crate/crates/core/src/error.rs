use thiserror::Error;

/// Errors raised by the algebraic and combinatorial routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid index set: {0}")]
    InvalidIndexSet(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("{y} is not below {w} in the Bruhat order")]
    NotBelow { y: String, w: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("inexact division: {0}")]
    InexactDivision(String),

    #[error("degree bound {bound} exceeded (pair of degree {degree})")]
    DegreeBoundExceeded { bound: u32, degree: u32 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("verification failed: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;
