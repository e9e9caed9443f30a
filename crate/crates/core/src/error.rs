use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error("pole: {0}")]
    Pole(String),

    #[error("range error: {0}")]
    Range(String),

    #[error("zero ordering violated: {0}")]
    Ordering(String),

    #[error("degenerate spacing: {0}")]
    DegenerateSpacing(String),

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("usage: {0}")]
    Usage(String),

    #[error(
        "cache file {path}: parse error at byte {offset} (line {line}, column {column}): {message}"
    )]
    CacheParse {
        path: PathBuf,
        offset: usize,
        line: usize,
        column: usize,
        message: String,
    },

    #[error("cache file {path}: stale (found version {found}, expected {expected})")]
    StaleCache {
        path: PathBuf,
        found: u64,
        expected: u64,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for failures of the numerics themselves, as opposed to bad input or I/O.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::Numerical(_)
                | Error::Pole(_)
                | Error::DivisionByZero
                | Error::Ordering(_)
                | Error::DegenerateSpacing(_)
                | Error::Invariant(_)
        )
    }
}
