use alloc::string::String;

/// Errors produced by the library operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("function is not bent")]
    NotBent,
    #[error("weight {weight} is not an admissible bent weight for {n} variables")]
    NotBentWeight { n: usize, weight: u64 },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("function is nonzero at the origin")]
    NonzeroAtOrigin,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("wrong parity: q(c) must be {expected}")]
    WrongParity { expected: u8 },
    #[error("input too large: {0}")]
    TooLarge(String),
    #[error("malformed graph6 string: {0}")]
    MalformedGraph6(String),
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },
    #[error("variable x{index} out of range for {n} variables")]
    VariableOutOfRange { index: usize, n: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
