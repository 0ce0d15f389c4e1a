use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("not an involution: {0}")]
    NotAnInvolution(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown series name `{0}`")]
    UnknownSeries(String),

    #[error("series arithmetic: {0}")]
    Series(String),

    #[error("invalid path: {0}")]
    InvalidPath(String),

    #[error("inadmissible crossing sequence: {0}")]
    Inadmissible(String),

    #[error("postcondition failed: {0}")]
    Postcondition(String),
}
