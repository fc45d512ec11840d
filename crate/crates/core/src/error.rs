use thiserror::Error;

/// Errors raised by the enumeration engines and their helpers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Exhaustive enumeration was asked for a size above the configured bound.
    #[error(
        "refusing exhaustive enumeration of size {n}: bound is {bound} (Bell({n}) partitions)"
    )]
    ResourceGuard { n: usize, bound: usize },

    /// A partition was passed where a maximal nesting number of at most `m` is required.
    #[error("partition has maximal nesting number {found}, expected at most {max}")]
    NestingTooLarge { found: usize, max: usize },

    /// An index outside `1..=m`.
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    /// A coefficient table does not reach the order a computation needs.
    #[error("coefficient table has {have} levels, need {need}")]
    InsufficientTable { have: usize, need: usize },

    /// A sample point is unusable for series evaluation.
    #[error("invalid sample point: {0}")]
    InvalidSamplePoint(String),

    /// An exactness guarantee of the algebra was violated.
    #[error("internal consistency error: {0}")]
    Inconsistency(String),

    /// Malformed input such as a bad restricted-growth string.
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
