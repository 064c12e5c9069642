use thiserror::Error;

/// Errors raised across the crate.
///
/// The variants map onto the CLI exit codes: [`Error::RegularityViolation`]
/// exits with 3, everything caused by bad input exits with 2.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("unsupported type: {0}")]
    UnsupportedType(String),
    #[error("unsupported regularity profile: {0}")]
    UnsupportedProfile(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("regularity violation: {0}")]
    RegularityViolation(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

macro_rules! invalid {
    ($($arg:tt)*) => { $crate::error::Error::InvalidInput(format!($($arg)*)) };
}
macro_rules! precondition {
    ($($arg:tt)*) => { $crate::error::Error::Precondition(format!($($arg)*)) };
}
macro_rules! internal {
    ($($arg:tt)*) => { $crate::error::Error::Internal(format!($($arg)*)) };
}
pub(crate) use {internal, invalid, precondition};
