use thiserror::Error;

/// Errors raised by graph construction, exploration and the algorithms built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range 1..={n}{}", line_suffix(*.line))]
    OutOfRange {
        vertex: u64,
        n: usize,
        line: Option<usize>,
    },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("start order is not a permutation of 1..={n}: {reason}")]
    InvalidStartOrder { n: usize, reason: String },

    /// An internal stack was popped while empty or a sentinel was disturbed.
    /// Never caused by valid input.
    #[error("internal invariant violated: {0}")]
    InternalInvariant(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("graph too large for the oracle: n = {n} exceeds limit {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error("bad generator spec: {0}")]
    BadSpec(String),

    #[error("unknown tag: {0}")]
    UnknownTag(String),
}

fn line_suffix(line: Option<usize>) -> String {
    match line {
        Some(l) => format!(" at line {l}"),
        None => String::new(),
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
