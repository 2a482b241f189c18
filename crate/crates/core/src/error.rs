use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank must be at least 1")]
    ZeroRank,

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("rank {rank} exceeds the Weyl group enumeration limit of {limit}")]
    RankTooLarge { rank: usize, limit: usize },

    #[error("{0} lies outside the dominance interval [0, rho]")]
    OutsideInterval(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid A-shape: {0}")]
    InvalidShape(String),

    #[error("root datum mismatch: {0}")]
    FamilyMismatch(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("vertex {vertex} has out-degree {got}, expected {expected}")]
    RaggedDegree {
        vertex: usize,
        expected: usize,
        got: usize,
    },

    #[error("vertex id {id} out of range for {n} vertices (line {line})")]
    VertexOutOfRange { id: usize, n: usize, line: usize },

    #[error("graph is empty")]
    EmptyGraph,

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("graph is not strongly connected")]
    Disconnected,

    #[error("chain never mixes: {0}")]
    NoMixing(String),

    #[error("limit exceeded: {0}")]
    LimitExceeded(String),

    #[error("numerical routine failed: {0}")]
    Numerical(String),

    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
