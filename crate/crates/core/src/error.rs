use thiserror::Error;

/// Errors shared by every construction in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("unknown id `{0}`")]
    UnknownId(String),

    #[error("invalid input: {0}")]
    Input(String),

    /// An enumeration hit one of its mandatory bounds.
    #[error("budget exceeded: bound `{bound}` = {limit} hit ({progress})")]
    Budget {
        bound: String,
        limit: usize,
        progress: String,
    },

    #[error("truncation too small: {0}")]
    Truncation(String),

    #[error("construction incomplete: {0}")]
    Incomplete(String),
}

impl Error {
    pub fn budget(bound: impl Into<String>, limit: usize, progress: impl Into<String>) -> Self {
        Error::Budget {
            bound: bound.into(),
            limit,
            progress: progress.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
