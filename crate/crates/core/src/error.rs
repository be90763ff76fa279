use thiserror::Error;

/// Errors raised by graph construction, tree operations and the brute-force oracles.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("graphs are limited to {max} vertices, got {n}")]
    TooManyVertices { n: usize, max: usize },
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex set is empty")]
    EmptyVertexSet,
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph is not chordal")]
    NotChordal,
    #[error("vertex set is not convex")]
    NotConvex,
    #[error("graph is not trivially perfect")]
    NotTriviallyPerfect,
    #[error("invalid parameters: {0}")]
    InvalidParameter(String),
    #[error("invalid search tree: {0}")]
    InvalidTree(String),
    #[error("cannot rotate the root vertex {vertex}")]
    RotateRoot { vertex: usize },
    #[error("rotation step {step} names vertex {vertex}, which is the current root")]
    SequenceRoot { step: usize, vertex: usize },
    #[error("rotation step {step} names vertex {vertex}, which is out of range")]
    SequenceVertex { step: usize, vertex: usize },
    #[error("{what} cap exceeded: {count} > {cap}")]
    CapExceeded { what: &'static str, count: String, cap: u64 },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),
}

impl Error {
    /// True for errors caused by a size cap rather than bad input.
    pub fn is_cap(&self) -> bool {
        matches!(self, Error::CapExceeded { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
