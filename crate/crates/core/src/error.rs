use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("qubit count mismatch: {left} vs {right}")]
    WidthMismatch { left: usize, right: usize },
    #[error("group parameter mismatch: {0}")]
    ParameterMismatch(String),
    #[error("generator images are not a representation: {0}")]
    NotARepresentation(String),
    #[error("group closure exceeded the element cap of {cap}")]
    CapExceeded { cap: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("braid word letter {letter} out of range for {strands} strands")]
    BadLetter { letter: i32, strands: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
