use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid vertex set: {0}")]
    InvalidVertexSet(String),

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("line {line}: {source}")]
    AtLine {
        line: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("{0} requires a connected graph")]
    Disconnected(&'static str),

    #[error("{what} is {actual}, exceeding the configured cap of {cap}")]
    CapExceeded {
        what: &'static str,
        actual: usize,
        cap: usize,
    },

    #[error("eigensolver did not converge after {0} iterations")]
    NoConvergence(usize),

    #[error("hypothesis not met: {0}")]
    Hypothesis(String),

    #[error("assignment does not match the graph: {0}")]
    DomainMismatch(String),

    #[error("io: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
