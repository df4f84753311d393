use std::io;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum HarnessError {
    /// Malformed or inconsistent experiment configuration.
    #[error("{source_name}: {message}")]
    Config { source_name: String, message: String },
    #[error("invalid {field}: {reason}")]
    Invalid { field: String, reason: String },
    #[error("{context}: {source}")]
    Io {
        context: String,
        #[source]
        source: io::Error,
    },
    #[error(transparent)]
    Core(#[from] npd_core::Error),
    #[error("could not start worker pool: {0}")]
    Pool(String),
    #[error("could not serialise results: {0}")]
    Output(String),
}

pub type Result<T> = std::result::Result<T, HarnessError>;

impl HarnessError {
    pub(crate) fn invalid(field: impl Into<String>, reason: impl Into<String>) -> Self {
        HarnessError::Invalid { field: field.into(), reason: reason.into() }
    }

    pub(crate) fn io(context: impl Into<String>, source: io::Error) -> Self {
        HarnessError::Io { context: context.into(), source }
    }

    /// 1 usage, 2 data, 3 estimator.
    pub fn exit_code(&self) -> i32 {
        use npd_core::Error as E;
        match self {
            HarnessError::Invalid { .. } => 1,
            HarnessError::Config { .. } | HarnessError::Io { .. } | HarnessError::Output(_) => 2,
            HarnessError::Pool(_) => 3,
            HarnessError::Core(e) => match e {
                E::InvalidParameter { .. } => 1,
                E::EmptySeries | E::NonFinite { .. } | E::Csv(_) | E::TooShort { .. } | E::SymbolOverflow { .. } => 2,
                _ => 3,
            },
        }
    }
}
