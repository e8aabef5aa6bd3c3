use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse token `{token}`")]
    Parse { token: String },

    #[error("malformed input: {0}")]
    Syntax(String),

    /// A word that was expected to lie in the image of the shift contains `σ_1^{±1}`.
    #[error("letter {position} has index 1, word is not a shifted word")]
    NotShifted { position: usize },

    #[error("{what} exceeded its cap of {cap}")]
    CapExceeded { what: &'static str, cap: usize },

    /// A free group element grew past the element-length cap.
    #[error("free group element of length {len} exceeds the cap of {cap} letters")]
    ElementTooLong { len: usize, cap: usize },

    #[error("color sequence of length {len} is too short for a word of width {width}")]
    SequenceTooShort { len: usize, width: u32 },

    #[error("matrix is not invertible over Z[t, 1/t]")]
    NotInvertible,

    /// A runtime check of a known identity failed. This always indicates a bug.
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
