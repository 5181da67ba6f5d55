use num_bigint::BigUint;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("extension degree must be at least 1")]
    InvalidDegree,
    #[error("field of size {size} exceeds the limit of {limit}")]
    DegreeTooLarge { size: BigUint, limit: u64 },
    #[error("operands belong to different fields")]
    SpecMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not the size of a subfield")]
    InvalidBase(u64),
    #[error("digit {digit} out of range for GF({order})")]
    InvalidDigit { digit: u32, order: u32 },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("ambient dimensions differ ({0} vs {1})")]
    AmbientMismatch(usize, usize),
    #[error("subspace dimensions differ ({0} vs {1})")]
    DimensionMismatch(usize, usize),
    #[error("need at least two distinct codewords")]
    TooFewCodewords,
    #[error("code size {size} exceeds cap {cap}")]
    CapExceeded { size: BigUint, cap: u64 },
    #[error("expected {expected} message symbols, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("code has a single codeword")]
    TrivialCode,
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("malformed export: {0}")]
    Format(String),
}

impl Error {
    pub(crate) fn cap_exceeded(size: impl Into<BigUint>, cap: u64) -> Self {
        Error::CapExceeded {
            size: size.into(),
            cap,
        }
    }
}
