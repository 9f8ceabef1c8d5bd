use thiserror::Error;

pub type Result<T> = std::result::Result<T, FclError>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FclError {
    #[error("not in class F: {0}")]
    NotInClass(String),
    #[error("invalid R-transform: {0}")]
    InvalidRTransform(String),
    #[error("zero polynomial where a nonzero one is required")]
    ZeroPolynomial,
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("insufficient terms: need {needed}, have {have}")]
    InsufficientTerms { needed: usize, have: usize },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("internal computation mismatch: {0}")]
    Computation(String),
    #[error("eliminant is identically zero after cleaning")]
    DegenerateEliminant,
    #[error("decomposition is not real: {0}")]
    DecompositionNotReal(String),
    #[error("continuation failure: {0}")]
    ContinuationFailure(String),
    #[error("network access is disabled")]
    NetworkDisabled,
    #[error("not found: {0}")]
    NotFound(String),
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for FclError {
    fn from(e: std::io::Error) -> Self {
        FclError::Io(e.to_string())
    }
}
