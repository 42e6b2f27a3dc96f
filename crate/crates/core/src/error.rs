use thiserror::Error;

/// Library-wide error type. Input errors map to CLI exit code 1,
/// anomalies (discharging gaps) to exit code 2.
#[derive(Debug, Error)]
pub enum Error {
    #[error("input error: {0}")]
    Input(String),

    #[error("embedding error: {0}")]
    Embedding(String),

    #[error("hypothesis violation: {0}")]
    Hypothesis(String),

    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub fn input(msg: impl Into<String>) -> Error {
        Error::Input(msg.into())
    }

    pub fn embedding(msg: impl Into<String>) -> Error {
        Error::Embedding(msg.into())
    }

    pub fn hypothesis(msg: impl Into<String>) -> Error {
        Error::Hypothesis(msg.into())
    }

    pub fn internal(msg: impl Into<String>) -> Error {
        Error::Internal(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
