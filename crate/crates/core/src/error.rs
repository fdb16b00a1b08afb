use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("variable count mismatch: {left} vs {right}")]
    VarCountMismatch { left: usize, right: usize },

    #[error("determinant size {size} exceeds the supported limit of {limit}")]
    MatrixTooLarge { size: usize, limit: usize },

    #[error("enumeration guard exceeded: {what} needs {needed} elements, limit is {limit}")]
    GuardExceeded {
        what: String,
        needed: String,
        limit: u64,
    },

    #[error("invalid {what}: {message}")]
    Invalid { what: &'static str, message: String },

    #[error("path family: {0}")]
    Family(String),

    #[error("sijection: {0}")]
    Sijection(String),

    #[error("no termination after {cap} bounces through the middle set")]
    IterationCap { cap: u128 },
}

impl Error {
    pub(crate) fn invalid(what: &'static str, message: impl Into<String>) -> Self {
        Error::Invalid {
            what,
            message: message.into(),
        }
    }
}
