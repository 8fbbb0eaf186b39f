use thiserror::Error;

/// Errors raised by the library.
///
/// The variants mirror the failure classes the CLI maps onto exit codes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or out-of-range arguments.
    #[error("invalid argument: {0}")]
    Argument(String),
    /// A well-formed input that does not satisfy an operation's precondition.
    #[error("precondition not met: {0}")]
    State(String),
    /// A configured size bound was exceeded.
    #[error("resource bound exceeded: {0}")]
    Resource(String),
    /// Text that could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

macro_rules! bail_arg {
    ($($arg:tt)*) => {
        return Err($crate::error::Error::Argument(format!($($arg)*)))
    };
}

macro_rules! bail_state {
    ($($arg:tt)*) => {
        return Err($crate::error::Error::State(format!($($arg)*)))
    };
}

pub(crate) use bail_arg;
pub(crate) use bail_state;
