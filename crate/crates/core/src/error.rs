use thiserror::Error;

/// Errors raised across the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A precondition on the arguments of an operation was violated.
    #[error("input error: {0}")]
    Input(String),

    /// A ground set (or derived construction) exceeds the supported width.
    #[error("capacity error: {what} needs {needed} elements, limit is {limit}")]
    Capacity {
        what: String,
        needed: usize,
        limit: usize,
    },

    /// Malformed text input. `line` is 1-based.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// No conversion route exists between two kinds for the requested step.
    #[error("plan error: {0}")]
    Plan(String),

    /// A description could not be turned into a rank oracle.
    #[error("decode error: {0}")]
    Decode(String),

    /// A structural bound that holds for every matroid was violated, which
    /// means the input was not a matroid.
    #[error("invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: msg.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
