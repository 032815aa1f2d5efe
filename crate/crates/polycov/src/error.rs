use crate::factored::FactoredInteger;
use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("domain size mismatch: {left} vs {right}")]
    DomainMismatch { left: usize, right: usize },

    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("not a permutation: {0}")]
    InvalidPermutation(String),

    #[error("cap exceeded: group order {order} is larger than the cap")]
    CapExceeded { order: FactoredInteger },

    #[error("not an sggi: {0}")]
    NotSggi(String),

    #[error("poset is structurally malformed: {0}")]
    Structural(String),

    #[error("polytope validation failed ({0}); operation requires a valid polytope")]
    NotPolytopal(String),

    #[error("unknown face id {0:?}")]
    UnknownFace(String),

    #[error("faces {0:?} and {1:?} are not comparable")]
    Incomparable(String, String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("arithmetic overflow: {0}")]
    Overflow(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
