use sixsplit_core::CoreError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SplitError {
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("expected six points, got {0}")]
    WrongCount(usize),
    #[error("points {0} and {1} coincide")]
    Duplicate(usize, usize),
    #[error("triple is not distinguished: {0}")]
    NotDistinguished(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("no construction applies: {0}")]
    NoConstruction(String),
    #[error("all strategies exhausted without a certified split ({} attempts)", .transcript.len())]
    Exhausted { transcript: Vec<crate::TranscriptEntry> },
    #[error("unknown strategy {0:?}")]
    UnknownStrategy(String),
    #[error("unknown sampler {0:?}")]
    UnknownSampler(String),
}

pub type Result<T> = std::result::Result<T, SplitError>;

pub(crate) fn precondition<T>(msg: impl Into<String>) -> Result<T> {
    Err(SplitError::Precondition(msg.into()))
}
