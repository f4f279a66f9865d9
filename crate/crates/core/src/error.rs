use thiserror::Error;

/// Errors produced by graph construction, file parsing and the exact solvers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("edge ({u}, {v}) out of range for a graph on {n} vertices")]
    EdgeOutOfRange { u: usize, v: usize, n: usize },

    #[error("self-loop ({v}, {v}) is not allowed in a simple graph")]
    SelfLoop { v: usize },

    #[error("graph must have at least one vertex")]
    EmptyGraph,

    #[error("graph on {n} vertices exceeds the build ceiling of {max}")]
    TooLarge { n: usize, max: usize },

    #[error("graph is disconnected: no path between vertices {u} and {v}")]
    Disconnected { u: usize, v: usize },

    #[error("cannot delete vertex {v}: {reason}")]
    BadDeletion { v: usize, reason: String },

    #[error("invalid {family} parameters: {reason}")]
    BadFamily { family: String, reason: String },

    #[error("covering constraint {row} is empty; the program would be infeasible")]
    EmptyRow { row: usize },

    #[error("{what} supports at most {max} vertices, got {n}")]
    CeilingExceeded { what: String, n: usize, max: usize },

    #[error("({u}, {v}) is not an edge")]
    NotAnEdge { u: usize, v: usize },

    #[error("parse error at {location}: {reason}")]
    Parse { location: String, reason: String },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(location: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Parse {
            location: location.into(),
            reason: reason.into(),
        }
    }

    pub(crate) fn ceiling(what: impl Into<String>, n: usize, max: usize) -> Self {
        Error::CeilingExceeded {
            what: what.into(),
            n,
            max,
        }
    }
}
