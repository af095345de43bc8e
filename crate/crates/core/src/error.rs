use thiserror::Error;

use crate::graph::VertexId;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("edge #{index} ({u}, {v}) has an endpoint outside 0..{n}")]
    EndpointOutOfRange {
        index: usize,
        u: VertexId,
        v: VertexId,
        n: usize,
    },

    #[error("vertex {vertex} is outside 0..{n}")]
    VertexOutOfRange { vertex: VertexId, n: usize },

    #[error("side assignment covers {got} vertices, graph has {expected}")]
    PartialAssignment { expected: usize, got: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("graph has {n} vertices, exhaustive search is limited to {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error("graph contains a cycle, expected a forest")]
    NotAcyclic,

    /// A checker produced a certificate its own verifier rejects. This is a
    /// bug in the checker, never a problem with the input.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
