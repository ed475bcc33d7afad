use thiserror::Error;

/// Errors surfaced by graph construction, oracle builds and queries.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("capacity exceeded for {what}: {actual} > {limit}")]
    Capacity {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("edge not contained in any mincut for the given pair")]
    NotContained,

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}

pub(crate) fn internal(msg: impl Into<String>) -> Error {
    Error::Internal(msg.into())
}
