use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("graph has {n} vertices; at most {limit} supported here")]
    SizeLimit { n: usize, limit: usize },

    #[error("state encoding needs {bits} bits; at most 128 supported")]
    StateEncoding { bits: usize },

    #[error("memo table exceeded its limit of {0} entries")]
    MemoLimit(usize),

    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("eraser map covers {got} vertices but graph has {expected}")]
    EraserMismatch { expected: usize, got: usize },

    #[error("strategy precondition failed: {0}")]
    Strategy(String),

    #[error("malformed stream: {0}")]
    Stream(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
