use thiserror::Error;

use crate::graph::Edge;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed graph6: {0}")]
    Graph6(String),
    #[error("graph has {0} vertices; at most 64 are supported")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("invalid edge {0}: endpoints must differ")]
    Loop(usize),
    #[error("edge {0} is already present")]
    EdgePresent(Edge),
    #[error("edge {0} is not present")]
    EdgeAbsent(Edge),
    #[error("graph has an isolated vertex ({0})")]
    IsolatedVertex(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("built-in enumeration supports n <= {max}, got {n}")]
    EnumerationTooLarge { n: usize, max: usize },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("unknown check id `{0}`")]
    UnknownCheck(String),
    #[error("unknown search id `{0}`")]
    UnknownSearch(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
