use thiserror::Error;

use crate::graph::MAX_VERTICES;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("graph has {0} vertices, the supported maximum is {MAX_VERTICES}")]
    TooManyVertices(usize),

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("adjacency is not symmetric between {0} and {1}")]
    Asymmetric(usize, usize),

    #[error("vertex set must be non-empty")]
    EmptySet,

    #[error("{0} is not a clique")]
    NotAClique(String),

    #[error("cliques do not cover every edge and vertex of the graph")]
    NotACover,

    #[error("cover is not usable for compression: {0}")]
    CoverRequirement(&'static str),

    #[error("graph has no min-max clique covering with simple intersection")]
    NotSimplyCoverable,

    #[error("compressed graphs from distinct covers are not isomorphic")]
    NonUniqueCompression,

    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),

    #[error("invalid family spec: {0}")]
    InvalidFamily(String),

    #[error("forcing record does not colour every vertex")]
    IncompleteClosure,

    #[error("forcing tree rooted at {0} is not an induced tree")]
    NotInducedTree(usize),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("graph6 long form (n >= 63) is not supported")]
    Graph6LongForm,

    #[error("generated corpus is limited to n <= {max}; use a graph6 file for larger orders")]
    CorpusTooLarge { max: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
