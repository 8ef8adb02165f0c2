//! Crate-wide error type.

use thiserror::Error;

/// Errors shared across the graph, spectral and verification modules.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("vertex count {0} outside supported range 1..=64")]
    VertexCount(usize),

    #[error("combined vertex count {0} exceeds 64")]
    SizeOverflow(usize),

    #[error("vertex index {index} out of range for graph on {n} vertices")]
    InvalidVertex { index: usize, n: usize },

    #[error("self-loops are not allowed (vertex {0})")]
    SelfLoop(usize),

    #[error("removing every vertex leaves nothing to inspect")]
    RemovalLeavesNothing,

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("graph on {n} vertices too large for exact isomorphism (limit {limit})")]
    TooLargeForExact { n: usize, limit: usize },

    #[error("enumeration supported only for n <= {limit}, got {n}")]
    EnumerationLimit { n: usize, limit: usize },

    #[error("twin-class profile space has {profiles} configurations, beyond the budget {limit}")]
    ProfileSpace { profiles: u128, limit: u128 },

    #[error("alpha = {0} outside the valid range {1}")]
    AlphaRange(String, &'static str),

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("matrix has a negative entry; Perron routines need entrywise nonnegative input")]
    NegativeEntry,

    #[error("matrix is reducible (support graph disconnected)")]
    Reducible,

    #[error("iteration did not converge within {0} steps")]
    NoConvergence(usize),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("characteristic polynomial limited to dimension <= {limit}, got {dim}")]
    DimensionCap { dim: usize, limit: usize },

    #[error("no real root located in [{lo}, {hi}]")]
    NoRootBracket { lo: f64, hi: f64 },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("random generation failed after {0} attempts")]
    GenerationFailed(usize),

    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
