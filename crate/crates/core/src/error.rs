use thiserror::Error;

use crate::ambient::Ambient;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("variable sets differ: {left} vs {right}")]
    AmbientMismatch { left: Ambient, right: Ambient },

    #[error("contract violation in {op}: {detail}")]
    Contract { op: &'static str, detail: String },

    #[error("grading violation: {0}")]
    Grading(String),

    #[error("structural error: {0}")]
    Structural(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("unknown structure `{0}`")]
    UnknownStructure(String),

    #[error("{path}: {message}")]
    Io { path: String, message: String },
}

impl Error {
    pub(crate) fn contract(op: &'static str, detail: impl Into<String>) -> Self {
        Error::Contract { op, detail: detail.into() }
    }

    pub(crate) fn mismatch(left: Ambient, right: Ambient) -> Self {
        Error::AmbientMismatch { left, right }
    }
}
