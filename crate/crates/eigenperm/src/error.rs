use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("series order too small: need at least {needed}, have {have}")]
    OrderTooSmall { needed: usize, have: usize },

    #[error("series has no compositional inverse: coefficient of x is zero")]
    NonInvertible,

    #[error("leading coefficient {0} is not the square of a rational")]
    NotARationalSquare(String),

    #[error("leading coefficient {0} must be positive")]
    NonPositiveLeading(String),

    #[error("agreement solve hit a zero pivot at index {index}; solution would not be unique")]
    NonUniqueStep { index: usize },

    #[error("multinomial parts sum to {sum}, expected {total}")]
    PartsSumMismatch { total: usize, sum: usize },

    #[error("{what} is limited to {limit}, requested {requested}")]
    LimitExceeded {
        what: &'static str,
        limit: usize,
        requested: usize,
    },

    #[error("empty permutation")]
    EmptyPermutation,

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("left-to-right-maximum blocks are not set-increasing: {0}")]
    ConditionIViolation(String),

    #[error("invalid cycle-labeled tree: {0}")]
    InvalidTree(String),

    #[error("invalid outdegree sequence: {0}")]
    InvalidCensus(String),

    #[error("weight sequence too short: need {needed} terms, have {have}")]
    WeightsTooShort { needed: usize, have: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
