use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed textual input; `token` is the offending piece.
    #[error("cannot parse `{token}`: {message}")]
    Format { token: String, message: String },
    /// An operation was called outside its domain.
    #[error("domain error: {0}")]
    Domain(String),
    /// The requested combination is not supported.
    #[error("unsupported: {0}")]
    Capability(String),
}

impl Error {
    pub(crate) fn format(token: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Format {
            token: token.into(),
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
