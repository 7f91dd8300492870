//! Error type shared across the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, CoreError>;

#[derive(Debug, Error)]
pub enum CoreError {
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    /// Malformed input data; `line` is 1-based.
    #[error("{path}:{line}: {message}")]
    Parse {
        path: String,
        line: usize,
        message: String,
    },

    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("index out of range in {context}: {index} not below {bound}")]
    IndexOutOfRange {
        context: &'static str,
        index: usize,
        bound: usize,
    },

    #[error("invalid value in {context}: {message}")]
    InvalidValue {
        context: &'static str,
        message: String,
    },

    /// A caller supplied a parameter outside its documented domain.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("empty input: {0}")]
    EmptyInput(String),

    /// NaN or infinity reached the numeric pipeline.
    #[error("numeric failure: {0}")]
    NonFinite(String),

    /// Unrecognized binary container (bad magic, unsupported version).
    #[error("format error: {0}")]
    Format(String),
}

impl CoreError {
    pub fn parse(path: impl Into<String>, line: usize, message: impl Into<String>) -> Self {
        CoreError::Parse {
            path: path.into(),
            line,
            message: message.into(),
        }
    }
}
