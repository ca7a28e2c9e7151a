use thiserror::Error;

/// Errors raised across the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown vertex label `{0}`")]
    UnknownVertex(String),

    #[error("duplicate vertex label `{0}`")]
    DuplicateLabel(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("face count exceeds guard of {guard} faces")]
    FaceGuard { guard: usize },

    #[error("graph has {0} vertices; at most {max} are supported", max = crate::bitset::VSet::CAPACITY)]
    Capacity(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
