use std::fmt;

/// Errors reported by the solver's public operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Operand shapes do not agree.
    DimensionMismatch(String),
    /// An input carries NaN or infinite values.
    NotFinite(&'static str),
    /// A parameter lies outside its documented range.
    InvalidParameter(String),
    /// An operation received an empty input it cannot act on.
    EmptyInput(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch(msg) => write!(f, "dimension mismatch: {msg}"),
            Error::NotFinite(ctx) => write!(f, "non-finite values in {ctx}"),
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::EmptyInput(ctx) => write!(f, "empty input: {ctx}"),
        }
    }
}

impl std::error::Error for Error {}
