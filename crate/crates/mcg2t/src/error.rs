use thiserror::Error;

/// Errors raised by the word calculus and the invariant computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A token string does not conform to the word grammar. Token positions
    /// are 1-based.
    #[error("syntax error at token {position}: {message}")]
    Syntax { position: usize, message: String },

    /// An operation that requires a pure mapping class received a word whose
    /// normal form still contains the puncture swap.
    #[error("not a pure mapping class: word contains rho")]
    NotPure,

    /// A precondition on the arguments was violated.
    #[error("{0}")]
    Domain(String),

    /// The word is not in the kernel of the matrix homomorphism.
    #[error("not in kernel")]
    NotInKernel,

    /// The image of the peripheral loop did not have conjugate shape. This
    /// indicates a bug in the generator action tables and never occurs on
    /// valid input.
    #[error("extraction failed: peripheral image is not a conjugate")]
    ExtractionFailed,

    /// An internal consistency check failed.
    #[error("internal verification failure: {0}")]
    Internal(String),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
