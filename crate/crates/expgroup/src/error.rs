//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// Syntax error with a 1-based column.
    #[error("parse error at column {col}: {msg}")]
    Parse { col: usize, msg: String },

    /// A name that is neither a declared generator nor a binding.
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),

    /// Operation defined only for nontrivial elements.
    #[error("{0}: the identity has no root decomposition")]
    IdentityInput(&'static str),

    /// The selected ring does not provide the named capability.
    #[error("ring capability `{0}` is not available")]
    RingCapability(&'static str),

    /// Bad alphabet declaration (duplicate, reserved, or ill-formed name).
    #[error("invalid alphabet: {0}")]
    Alphabet(String),

    /// Malformed command line in the CLI or a batch file.
    #[error("command error: {0}")]
    Command(String),
}

impl Error {
    pub fn parse(col: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            col,
            msg: msg.into(),
        }
    }
}
