use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("objects live over different Hopf algebras")]
    CategoryMismatch,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("symbolic capacity exceeded: {what} is {size}, limit {limit}")]
    Capacity {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("filtered algebra is not connected: {0}")]
    NotConnected(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("parse error at {context}: {message}")]
    Parse { context: String, message: String },

    /// A computed identity that must hold by construction failed.
    #[error("internal fault: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn parse(context: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            context: context.into(),
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
