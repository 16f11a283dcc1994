use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid group descriptor `{descriptor}`: {reason}")]
    InvalidDescriptor { descriptor: String, reason: String },

    #[error("cayley table rejected: {0}")]
    Ingestion(String),

    #[error("cannot read `{}`: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("vertex {vertex} out of range for a graph on {vcount} vertices")]
    VertexOutOfRange { vertex: usize, vcount: usize },

    #[error("element {element} out of range for a group of order {order}")]
    ElementOutOfRange { element: usize, order: usize },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("{what}: limit {limit} exceeded{}", best.map(|b| format!(" (best bound found: {b})")).unwrap_or_default())]
    Capacity {
        what: String,
        limit: usize,
        best: Option<usize>,
    },

    #[error("malformed graph json: {0}")]
    GraphJson(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
