use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid vertex {0}")]
    InvalidVertex(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("not a perfect matching: {0}")]
    NotMatching(String),

    #[error("cannot shift down: vertex {0} is in use")]
    InvalidShift(String),

    #[error("no pair partitions on an odd number ({0}) of points")]
    EmptySet(usize),

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("composition context mismatch: {0}")]
    ContextMismatch(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal consistency violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
