use thiserror::Error;

use crate::partition::Partition;
use crate::symfunc::Basis;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed partition literal {0:?}")]
    Parse(String),
    #[error("invalid partition {0}")]
    InvalidPartition(String),
    #[error("basis mismatch: {0} vs {1}")]
    BasisMismatch(Basis, Basis),
    #[error("operation needs basis {expected}, got {found}")]
    WrongBasis {
        expected: &'static str,
        found: Basis,
    },
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("{inner} is not contained in {outer}")]
    NotContained { outer: Partition, inner: Partition },
    #[error("need at least {needed} variables for a faithful evaluation, got {got}")]
    TooFewVariables { needed: usize, got: usize },
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// A mathematical assertion failed. This is never expected; it signals a
    /// bug or a counterexample.
    #[error("assertion failed: {0}")]
    Assertion(String),
    #[error("request too large: {0}; pass the slow flag to run it anyway")]
    Oversize(String),
    #[error("malformed JSON document: {0}")]
    Schema(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn is_assertion(&self) -> bool {
        matches!(self, Error::Assertion(_))
    }
}
