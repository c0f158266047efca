use thiserror::Error;

/// Errors raised by the algebra, correspondence and invariant layers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid dimension {dim}: {reason}")]
    InvalidDimension { dim: i64, reason: String },

    #[error("invalid index {index}: {reason}")]
    InvalidIndex { index: i64, reason: String },

    #[error("context mismatch: dim(h)={left} vs dim(h)={right}")]
    ContextMismatch { left: u32, right: u32 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid witt indices: {0}")]
    InvalidWitt(String),

    #[error("out of domain: {0}")]
    OutOfDomain(String),

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    /// An identity that must hold by construction failed. Never a user error.
    #[error("internal defect: {0}")]
    Defect(String),
}

impl Error {
    /// True for failures caused by the caller's input rather than the library.
    pub fn is_user_error(&self) -> bool {
        !matches!(self, Error::Defect(_) | Error::Io(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
