use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} variables, found {found}")]
    Dimension { expected: usize, found: usize },

    /// The input is well-formed but outside the operation's domain
    /// (zero or unit ideal, empty prime, non-cover, ...).
    #[error("{0}")]
    Domain(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid graph: {0}")]
    Validation(String),

    #[error("{what} is {actual}, above the limit of {limit}; raise it with {flag}")]
    ResourceLimit {
        what: &'static str,
        actual: usize,
        limit: usize,
        flag: &'static str,
    },

    #[error("exponent overflow")]
    Overflow,

    #[error("irreducible decomposition is not minimal: {0}")]
    NonMinimalDecomposition(String),

    /// Two routes that must agree did not.
    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: msg.into(),
        }
    }
}
