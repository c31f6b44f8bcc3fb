use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("not a singularity link: {0}")]
    NotSingularityLink(String),
    #[error("infinite fundamental group: {0}")]
    InfiniteFundamentalGroup(String),
    #[error("unsupported family: {0}")]
    UnsupportedFamily(String),
    #[error("group closure exceeded {cap} elements")]
    ClosureCapExceeded { cap: usize },
    #[error("invariance check failed: {0}")]
    InvarianceFailure(String),
    #[error("relation check failed: {0}")]
    RelationFailure(String),
}

impl Error {
    /// Process exit code used by the command-line tool.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) | Error::InvalidInput(_) => 2,
            Error::NotSingularityLink(_) => 3,
            Error::InfiniteFundamentalGroup(_) => 4,
            Error::UnsupportedFamily(_) => 5,
            _ => 1,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
