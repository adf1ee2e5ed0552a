use thiserror::Error;

use crate::graph::{EdgeId, Vertex};

/// Errors raised while reading or writing a graph.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: malformed entry {content:?}")]
    Malformed { line: usize, content: String },
    #[error("line {line}: loop at vertex {vertex}")]
    Loop { line: usize, vertex: Vertex },
    #[error("line {line}: duplicate edge {u} {v}")]
    DuplicateEdge { line: usize, u: Vertex, v: Vertex },
    #[error("line {line}: vertex {vertex} is not below the declared count {count}")]
    VertexOutOfRange {
        line: usize,
        vertex: Vertex,
        count: usize,
    },
    #[error("graph6: byte {byte} at offset {offset} is outside 63..=126")]
    BadCharacter { offset: usize, byte: u8 },
    #[error("graph6: expected {expected} data bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("graph6: unsupported size (at most {max} vertices)")]
    UnsupportedSize { max: usize },
    #[error("graph6: padding bits must be zero")]
    NonZeroPadding,
    #[error("empty input")]
    Empty,
}

/// Errors raised by the structural and solver operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("loop at vertex {0}")]
    Loop(Vertex),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("graphs are limited to {max} vertices, got {n}")]
    TooManyVertices { n: usize, max: usize },
    #[error("input graph is disconnected")]
    DisconnectedInput,
    #[error("input graph is not a block graph")]
    NotBlockGraph,
    #[error("input graph has no edges")]
    EmptyEdgeSet,
    #[error("{m} edges exceeds the brute-force cap of {cap}")]
    TooLarge { m: usize, cap: usize },
    #[error("unknown edge id {0}")]
    UnknownEdge(EdgeId),
    #[error("edges passed to the triple test must be distinct")]
    NonDistinctEdges,
    #[error("vertices {0} and {1} lie in different components")]
    Unreachable(Vertex, Vertex),
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("unknown theorem tag {0:?}")]
    UnknownTheorem(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
