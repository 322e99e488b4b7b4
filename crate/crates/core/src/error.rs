use thiserror::Error;

/// Errors surfaced by the skein calculus and its front ends.
#[derive(Debug, Error)]
pub enum SkeinError {
    #[error("parse error at token {position}: {message}")]
    ParseError { position: usize, message: String },

    #[error("puncture index {index} out of range for k = {k}")]
    IndexOutOfRange { index: u8, k: u8 },

    #[error("operation only supported for k = 2 (got k = {0})")]
    UnsupportedArity(u8),

    #[error("trace generator references puncture beyond k = {0}")]
    MixedArity(u8),

    #[error("division by the zero rational function")]
    DivisionByZero,

    #[error("no relation of y-degree {degree} with unit leading coefficient is available")]
    NotReducible { degree: u32 },

    #[error("both inputs to the elimination have zero y-part")]
    DegenerateElimination,

    #[error("braid is outside the supported plat family: {0}")]
    UnsupportedFamily(String),

    #[error("leading coefficient of the recurrence vanishes at index {0}")]
    SingularLeadingCoefficient(i64),

    #[error("colored Jones sequence has no value at index {0}")]
    MissingSequenceValue(i64),

    #[error("diagram too large for the state sum ({crossings} crossings, limit {limit})")]
    TooLarge { crossings: usize, limit: usize },

    #[error("plat move {0} is not applicable there")]
    InapplicableMove(String),
}

pub type Result<T> = std::result::Result<T, SkeinError>;
