//! Error type shared by all modules of the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A letter outside the path alphabet was found at the given byte position.
    #[error("illegal character at position {0}")]
    IllegalCharacter(usize),

    /// Two objects that must share a dimension do not.
    #[error("dimension mismatch: found {found}, expected {expected}")]
    DimensionMismatch { found: String, expected: String },

    /// The operation is only defined for square paths / endomaps.
    #[error("not square: {east} east steps vs {north} north steps")]
    NotSquare { east: usize, north: usize },

    /// An index argument fell outside its admissible range.
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    /// The interval system violates the alternating-sequence constraints.
    #[error("invalid emmentaler: {0}")]
    InvalidEmmentaler(String),

    /// The map is not idempotent, so it has no interval-system form.
    #[error("map is not idempotent")]
    NotIdempotent,

    /// The three-letter word violates its well-formedness constraints.
    #[error("invalid zigzag word: {0}")]
    InvalidWord(String),

    /// Malformed textual input (map or emmentaler syntax).
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn dims(found: impl std::fmt::Display, expected: impl std::fmt::Display) -> Self {
        Error::DimensionMismatch {
            found: found.to_string(),
            expected: expected.to_string(),
        }
    }
}
