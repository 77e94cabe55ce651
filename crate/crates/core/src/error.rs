use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge `{edge}` is a loop at node `{node}`")]
    LoopEdge { edge: String, node: String },

    #[error("unknown node `{0}`")]
    UnknownNode(String),

    #[error("unknown edge `{0}`")]
    UnknownEdge(String),

    #[error("duplicate node label `{0}`")]
    DuplicateNode(String),

    #[error("duplicate edge label `{0}`")]
    DuplicateEdge(String),

    #[error("unknown polytope vertex label `{0}`")]
    UnknownLabel(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{what} cap of {cap} exceeded ({context})")]
    CapExceeded {
        what: &'static str,
        cap: usize,
        context: String,
    },

    #[error("graph has isolated node `{0}`")]
    IsolatedNode(String),

    #[error("graph must be connected")]
    Disconnected,

    #[error("graph must have at least one edge")]
    NoEdges,

    #[error("graph is not a tree")]
    NotATree,

    #[error("graph is not a forest")]
    NotAForest,

    #[error("graph has parallel edges `{0}` and `{1}`")]
    NotSimple(String, String),

    #[error("invalid subgraph: {0}")]
    InvalidSubgraph(String),

    #[error("invalid cycle: {0}")]
    InvalidCycle(String),

    #[error("vertex set is not a face")]
    NotAFace,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("f-polynomial has a negative coefficient at degree {0}")]
    NegativeCoefficient(usize),

    #[error("invalid f-polynomial: {0}")]
    InvalidPolynomial(String),
}

impl Error {
    /// Stable machine-readable kind, used by the CLI's `error[<kind>]:` prefix.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::LoopEdge { .. } => "loop",
            Error::UnknownNode(_) | Error::UnknownEdge(_) | Error::UnknownLabel(_) => "unknown",
            Error::DuplicateNode(_) | Error::DuplicateEdge(_) => "duplicate",
            Error::Parse { .. } => "parse",
            Error::CapExceeded { .. } => "cap",
            Error::IsolatedNode(_) => "isolated-node",
            Error::Disconnected => "disconnected",
            Error::NoEdges => "no-edges",
            Error::NotATree | Error::NotAForest => "not-a-tree",
            Error::NotSimple(..) => "not-simple",
            Error::InvalidSubgraph(_) => "invalid-subgraph",
            Error::InvalidCycle(_) => "invalid-cycle",
            Error::NotAFace => "not-a-face",
            Error::Precondition(_) => "precondition",
            Error::NegativeCoefficient(_) | Error::InvalidPolynomial(_) => "polynomial",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
