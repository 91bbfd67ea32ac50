use thiserror::Error;

/// Pipeline stage a structural failure was detected in.
pub type Stage = &'static str;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("precondition failed in {stage}: {message}")]
    Precondition { stage: Stage, message: String },

    #[error("structural error in {stage}: {message}")]
    Structural { stage: Stage, message: String },

    #[error("generation failed: {0}")]
    Generation(String),

    #[error("invalid pair file: {0}")]
    PairFile(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn structural(stage: Stage, message: impl Into<String>) -> Self {
        Error::Structural {
            stage,
            message: message.into(),
        }
    }

    pub fn precondition(stage: Stage, message: impl Into<String>) -> Self {
        Error::Precondition {
            stage,
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
