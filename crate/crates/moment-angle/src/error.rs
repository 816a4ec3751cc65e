//! Crate-wide error type.

/// Errors raised by constructions and queries.
///
/// The variants map onto the CLI exit codes: `Input` exits 2, `Capacity`
/// exits 3, and the remaining variants (malformed structures, domain
/// violations) also exit 2 since they indicate unusable input.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Malformed user input (bad vertex index, unparsable file, unknown name).
    #[error("input error: {0}")]
    Input(String),

    /// A precondition on the arguments of an operation was violated.
    #[error("domain error: {0}")]
    Domain(String),

    /// An internal structural invariant of a complex or pair model failed.
    #[error("structure error: {0}")]
    Structure(String),

    /// The requested computation exceeds the configured size caps.
    #[error("capacity error: {0}")]
    Capacity(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
    pub fn structure(msg: impl Into<String>) -> Self {
        Error::Structure(msg.into())
    }
    pub fn capacity(msg: impl Into<String>) -> Self {
        Error::Capacity(msg.into())
    }
}
