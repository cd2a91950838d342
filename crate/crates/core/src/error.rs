use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameters for {context}: {reason}")]
    InvalidParams { context: String, reason: String },

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("precision unreachable: {0}")]
    PrecisionUnreachable(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("coefficient t^{requested} is beyond the validity bound t^{order} of the series")]
    BeyondTruncation { requested: usize, order: usize },
}

impl Error {
    pub(crate) fn invalid(context: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::InvalidParams {
            context: context.into(),
            reason: reason.into(),
        }
    }
}
