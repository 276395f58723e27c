use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by {divisor} is unavailable in a ring of characteristic {characteristic}")]
    DivisionUnavailable { divisor: BigInt, characteristic: u64 },

    #[error("elements belong to different rings: {0}")]
    RingMismatch(String),

    #[error("ring `{0}` is not commutative")]
    RingNotCommutative(String),

    #[error("ring `{0}` is not associative")]
    RingNotAssociative(String),

    #[error("ring `{0}` is not power-associative; use the nonassoc method")]
    RingNotPowerAssociative(String),

    #[error("explicit gamma payload has {got} values, expected {expected}")]
    PayloadLength { expected: usize, got: usize },

    #[error("unsupported gamma assignment: {0}")]
    GammaMode(String),

    #[error("exponent {t} outside 1..={max}")]
    ExponentOutOfRange { t: u32, max: u32 },

    #[error("order {n} exceeds the cap {max}")]
    OrderTooLarge { n: usize, max: usize },

    #[error("malformed structure-constant table: {0}")]
    MalformedTable(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("ring has no unit element")]
    NoUnit,

    #[error("invalid ring descriptor: {0}")]
    InvalidDescriptor(String),

    #[error("claim `{claim}` is not meaningful over ring `{ring}`")]
    InvalidPairing { claim: String, ring: String },

    #[error("random sampling failed: {0}")]
    Sampling(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
