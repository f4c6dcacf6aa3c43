use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid interval: {0}")]
    InvalidInterval(&'static str),
    #[error("invalid fraction: {0}")]
    InvalidFraction(&'static str),
    #[error("invalid quiver: {0}")]
    InvalidQuiver(&'static str),
    #[error("{0} is not a prime")]
    NotPrime(u32),
    #[error("quiver mismatch")]
    QuiverMismatch,
    #[error("field mismatch")]
    FieldMismatch,
    #[error("malformed representation: {0}")]
    MalformedRepresentation(String),
    #[error("period mismatch: {0} vs {1}")]
    PeriodMismatch(usize, usize),
    #[error("period must be positive")]
    ZeroPeriod,
    #[error("period {0} exceeds the enumeration limit of {1}")]
    PeriodTooLarge(usize, usize),
    #[error("infinite-dimensional fold: orbit set contains a ray")]
    InfiniteFold,
    #[error("self-rigidity law violated: {0}")]
    PoolBound(String),
    #[error("fiber anomaly: {0}")]
    FiberAnomaly(String),
    #[error("invalid representation of type alpha: {0}")]
    InvalidAlpha(String),
    #[error("arithmetic overflow")]
    Overflow,
}
