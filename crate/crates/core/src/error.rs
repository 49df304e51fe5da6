use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Reasons a graph file line can be rejected.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParseErrorKind {
    #[error("missing header line `n m [b]`")]
    MissingHeader,
    #[error("malformed header: {0}")]
    MalformedHeader(String),
    #[error("malformed edge line: expected `u v w [d]`, got {0} fields")]
    MalformedEdge(usize),
    #[error("non-numeric token `{0}`")]
    NonNumeric(String),
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("negative weight {0}")]
    NegativeWeight(f64),
    #[error("weight {0} is not finite")]
    NonFiniteWeight(f64),
    #[error("negative delay {0}")]
    NegativeDelay(i64),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("header announces {expected} edges but file has {found}")]
    EdgeCountMismatch { expected: usize, found: usize },
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {kind}")]
    Parse { line: usize, kind: ParseErrorKind },

    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A predecessor chain did not lead back to the source. Only an internal
    /// bug can produce this.
    #[error("broken predecessor chain while rebuilding path to {target}")]
    BrokenPredecessorChain { target: usize },

    #[error("oracle cap exceeded: {what} = {value} > {cap}")]
    OracleCap {
        what: &'static str,
        value: usize,
        cap: usize,
    },

    #[error("{path}: {source}")]
    File {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, kind: ParseErrorKind) -> Self {
        Error::Parse { line, kind }
    }
}
