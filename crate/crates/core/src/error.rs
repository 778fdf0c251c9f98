use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field mismatch")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),
    #[error("zero ring: the defining ideal contains 1")]
    ZeroRing,
    #[error("ring mismatch")]
    RingMismatch,
    #[error("monomial order mismatch")]
    OrderMismatch,
    #[error("ring not Artinian")]
    NotArtinian,
    #[error("ring is not local at the origin")]
    NotLocal,
    #[error("ring is not Artinian Gorenstein")]
    NotGorenstein,
    #[error("minimal resolution requires grading")]
    NotGraded,
    #[error("module carries no ideal embedding")]
    NotAnIdeal,
    #[error("degree cap {0} exceeded")]
    DegreeCapExceeded(u32),
    #[error("dimension cap {0} exceeded")]
    DimensionCapExceeded(usize),
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    InvalidInput(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
