use thiserror::Error;

use crate::document::BugReport;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("internal error: {0}")]
    Internal(String),
    #[error("no certified split found; every six points can be split, so this is a bug")]
    Exhausted(Box<BugReport>),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invalid(_) => crate::EXIT_INVALID,
            CliError::Internal(_) | CliError::Exhausted(_) => crate::EXIT_BUG,
        }
    }
}
