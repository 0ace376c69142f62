use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("ordering is not a permutation of the vertex set")]
    NotPermutation,
    #[error("graph is not connected")]
    NotConnected,
    #[error("graph is not a proper interval graph")]
    NotProperInterval,
    #[error("ordering is not a bi-compatible elimination ordering")]
    NotBco,
    #[error("search budget of {0} nodes exhausted")]
    BudgetExceeded(u64),
    #[error("coverage requirements cannot be met by the full family")]
    Uncoverable,
    #[error("vertex {0} has degree < 2")]
    MinDegreeTooLow(usize),
    #[error("certificate is not a valid solution for the transformed graph")]
    InvalidCertificate,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
