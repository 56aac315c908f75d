use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or inconsistent input (group presentation, permutation, parameters).
    #[error("invalid input: {0}")]
    Invalid(String),

    /// A configured size limit would be exceeded; no partial answer is produced.
    #[error("budget exceeded: {what} needs {needed}, limit is {limit}")]
    Budget {
        what: &'static str,
        needed: u128,
        limit: u128,
    },

    /// An exact identity that must hold did not (broken character table, non-integral dimension).
    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

impl Error {
    /// Process exit status: 2 invalid input, 3 budget refusal, 4 internal consistency failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Invalid(_) => 2,
            Error::Budget { .. } => 3,
            Error::Consistency(_) => 4,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Invalid(msg.into()))
}
