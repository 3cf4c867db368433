use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("no exact quotient exists: {0}")]
    NotDivisible(String),
    #[error("variable image is not invertible: {0}")]
    NonInvertibleImage(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("size bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("invalid context: {0}")]
    InvalidContext(String),
    #[error("not a monomial: {0}")]
    NotMonomial(String),
    #[error("weights differ: {0} vs {1}")]
    WeightMismatch(usize, usize),
    #[error("not proportional: {0}")]
    NotProportional(String),
    #[error("negative exponent left after transform: {0}")]
    NegativeExponentResidue(String),
}

pub type Result<T> = std::result::Result<T, Error>;
