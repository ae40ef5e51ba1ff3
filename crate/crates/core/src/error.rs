use thiserror::Error;

/// Everything that can go wrong while reading, checking or searching data.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension must be positive")]
    NonPositiveDimension,
    #[error("fixed point set must be nonempty")]
    EmptyPointSet,
    #[error("point {point} has {len} weights, expected {expected}")]
    RaggedPoint {
        point: usize,
        len: usize,
        expected: usize,
    },
    #[error("zero weight at point {point}, slot {slot}")]
    ZeroWeight { point: usize, slot: usize },
    #[error("zero exponent in factor (1 - t^0)")]
    ZeroExponent,
    #[error("denominator factors must be positive, got {0}")]
    NonPositiveFactor(i64),
    #[error("degree {degree} out of range 0..={n}")]
    DegreeOutOfRange { degree: usize, n: usize },
    #[error("weight {weight} is not primitive: {reason}")]
    NotPrimitive { weight: i64, reason: String },
    #[error("unknown criterion `{0}`")]
    UnknownCriterion(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
    #[error("search space has {space} canonical data, above the ceiling of {ceiling}")]
    CeilingExceeded { space: u128, ceiling: u128 },
    #[error("invalid search: {0}")]
    InvalidSearch(String),
    #[error("malformed document: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
