use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("unknown module `{0}`")]
    UnknownModule(String),
    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),
    #[error("not admissible: {0}")]
    NotAdmissible(String),
    #[error("invalid path: {0}")]
    InvalidPath(String),
    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),
    #[error("invalid string: {0}")]
    InvalidString(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("internal consistency check failed: {0}")]
    Inconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
