use thiserror::Error;

/// Errors produced by the toolkit. Each variant maps onto one CLI exit code.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("oracle budget refused: {0}")]
    Budget(String),

    /// A certificate failed validation.
    #[error("verification failed: {0}")]
    Verification(String),

    /// A proof-derived inequality failed at runtime.
    #[error("internal contradiction: {0}")]
    Contradiction(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, msg: msg.into() }
    }

    /// Stable process exit code for this error class.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Verification(_) | Error::Contradiction(_) => 1,
            Error::Parse { .. } | Error::Json(_) | Error::Io(_) => 2,
            Error::Precondition(_) | Error::InvalidInput(_) => 3,
            Error::Budget(_) => 4,
        }
    }
}
