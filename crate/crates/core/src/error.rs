use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("determinant is {0}, expected 1")]
    Determinant(String),

    #[error("cannot parse {what}: {msg}")]
    Parse { what: &'static str, msg: String },

    #[error("invalid Farey symbol at edge {edge}: {reason}")]
    InvalidEdge { edge: usize, reason: String },

    #[error("invalid Farey symbol: {0}")]
    InvalidSymbol(String),

    #[error("invalid permutation pair: {0}")]
    InvalidPermutation(String),

    #[error("{0}")]
    InvalidArgument(String),

    #[error("index exceeds cap {cap} or group not finite-index")]
    IndexCap { cap: usize },

    #[error("not finite-index or cap too small: more than {max_edges} edges")]
    EdgeCap { max_edges: usize },

    #[error("membership iteration exceeded {cap} steps")]
    IterationCap { cap: u64 },

    #[error("oracle inconsistency: {0}")]
    OracleInconsistent(String),

    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn parse(what: &'static str, msg: impl Into<String>) -> Self {
        Error::Parse {
            what,
            msg: msg.into(),
        }
    }
}
