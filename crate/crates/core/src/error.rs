use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("inexact division: {0}")]
    InexactDivision(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("parameter bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("generator convention failed the relation suite: {0}")]
    ConventionFailure(String),
    #[error("element is not in the span of the basis")]
    NotInSpan,
    #[error("no commutation rule for {0}")]
    NoRule(String),
    #[error("straightening did not terminate within {steps} steps")]
    NonTermination { steps: usize },
    #[error("non-integral coefficient: {0}")]
    IntegralityFailure(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
