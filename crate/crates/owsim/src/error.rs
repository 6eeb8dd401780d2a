//! Crate-wide error type and process exit-code mapping.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A geometric or numeric argument violated a precondition.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A configuration value violated a constraint. `key` names the
    /// offending config key or field path.
    #[error("invalid configuration: {key}: {message}")]
    InvalidConfig { key: String, message: String },

    /// An allocation preset was requested on a layout it is not defined for.
    #[error("unsupported preset: {0}")]
    UnsupportedPreset(String),

    /// An allocation referenced an AP index missing from the scene.
    #[error("invalid allocation: {0}")]
    InvalidAllocation(String),

    /// The config document is not well-formed JSON.
    #[error("config parse error: {0}")]
    Parse(#[from] serde_json::Error),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Exit status for the CLI: validation problems exit 1, i/o exits 2.
    pub fn exit_code(&self) -> u8 {
        match self {
            Error::Io(_) => 2,
            _ => 1,
        }
    }
}

/// Shorthand for [`Error::InvalidConfig`].
pub(crate) fn config_err(key: &str, message: impl Into<String>) -> Error {
    Error::InvalidConfig {
        key: key.to_string(),
        message: message.into(),
    }
}
