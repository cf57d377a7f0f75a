use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A materialization or enumeration guard was exceeded. The message names
    /// the guard and the limiting size so callers can report it verbatim.
    #[error("guard exceeded: {what} is limited to {limit}, got {got}")]
    GuardExceeded {
        what: &'static str,
        limit: u64,
        got: u64,
    },
    /// Malformed or inconsistent input (descriptors, colorings, specs, ...).
    #[error("invalid input: {0}")]
    Invalid(String),
    /// A combination the library deliberately does not support.
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }

    pub fn unsupported(msg: impl Into<String>) -> Self {
        Error::Unsupported(msg.into())
    }
}
