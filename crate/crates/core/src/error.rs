use thiserror::Error;

/// Errors raised by the algebra layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: i64, right: i64 },

    #[error("inhomogeneous input: {0}")]
    InhomogeneousInput(String),

    #[error("ambient mismatch: {0}")]
    AmbientMismatch(String),

    #[error("map is not well defined: {0}")]
    NotWellDefined(String),

    #[error("operation requires a nonzero module")]
    ZeroModule,

    #[error("quotient Hom did not stabilize: dimensions {dims:?} at levels starting from {level}")]
    StabilizationFailure { level: i64, dims: Vec<usize> },

    #[error("source/target mismatch: {0}")]
    SourceTargetMismatch(String),

    #[error("representations are over different groups or fields")]
    GroupMismatch,

    #[error("representations are equivalent")]
    RepsEquivalent,

    #[error("hypothesis violated: {0}")]
    HypothesisViolation(String),

    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),

    #[error("invalid category: {0}")]
    InvalidCategory(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("search space too large: {0}")]
    TooLarge(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
