use std::path::PathBuf;

use crate::parse::ParseError;

/// Errors raised by ideal arithmetic and the analyses built on it.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("ring mismatch: expected {expected} variables, found {found}")]
    RingMismatch { expected: String, found: String },

    #[error("exponent overflow while computing {0}")]
    Overflow(&'static str),

    #[error("{0} is not divisible by {1}")]
    NotDivisible(String, String),

    #[error("colon by the zero ideal is not supported")]
    ColonByZero,

    #[error("operation requires a nonzero proper ideal, got {0}")]
    ImproperIdeal(&'static str),

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),

    #[error("schema violation: {0}")]
    Schema(String),

    #[error("cache I/O on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
