use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A polynomial expansion produced a term above its degree cap. This
    /// signals a logic bug in the caller, never bad user input.
    #[error("internal error: total degree {degree} exceeds cap {cap}")]
    DegreeCap { degree: u32, cap: u32 },

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("limit not covered by the q -> 1 formula: {0}")]
    LimitNotCovered(String),

    #[error("word {0} does not decompose into z-letters (must be empty or end in y)")]
    NotZDecomposable(String),

    #[error("Eisenstein series need an even weight >= 2, got {0}")]
    InvalidEisensteinWeight(u32),

    #[error("precision {precision} too small for weight {weight}: use at least {minimum}")]
    PrecisionTooSmall {
        precision: usize,
        weight: u32,
        minimum: usize,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
