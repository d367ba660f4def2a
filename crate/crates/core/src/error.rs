//! Error type shared across the library.

use thiserror::Error;

/// Errors produced by constructors, validators, and pipelines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A fraction with denominator zero was supplied.
    #[error("degenerate fraction: denominator is zero")]
    ZeroDenominator,

    /// Division of exact rationals by zero.
    #[error("division by zero")]
    DivisionByZero,

    /// An argument that must be positive was not.
    #[error("{what} must be positive (got {got})")]
    NonPositive {
        /// What the argument is.
        what: &'static str,
        /// The offending value.
        got: i64,
    },

    /// A pair that must be coprime was not.
    #[error("{what}: {a} and {b} are not coprime")]
    NotCoprime {
        /// What the pair is.
        what: &'static str,
        /// First member of the pair.
        a: i64,
        /// Second member of the pair.
        b: i64,
    },

    /// The linking matrix is singular, so the surgered manifold is not a
    /// rational homology sphere and the invariant is undefined.
    #[error("not a rational homology sphere: linking matrix has determinant 0")]
    NotRationalHomologySphere,

    /// Structured surgery data that violates its own defining identities.
    #[error("inconsistent surgery data: {0}")]
    InconsistentInstance(String),

    /// Input outside the hypotheses of the requested certificate/scan.
    #[error("hypothesis violated: {0}")]
    HypothesisViolation(String),

    /// Malformed textual input (slopes, rationals, CSV rows, JSON payloads).
    #[error("parse error: {0}")]
    Parse(String),

    /// Knot-table rows that fail validation, with their source line.
    #[error("knot table row {row}: {message}")]
    KnotTable {
        /// 1-based source line of the offending row.
        row: usize,
        /// What is wrong with it.
        message: String,
    },

    /// I/O failures while reading caller-supplied files.
    #[error("io error: {0}")]
    Io(String),
}

/// Convenience alias used across the crate.
pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
