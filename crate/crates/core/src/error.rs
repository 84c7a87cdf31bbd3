use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic must be 0 or a prime below 2^32, got {0}")]
    InvalidCharacteristic(u64),
    #[error("modulus must be nonzero")]
    ZeroModulus,
    #[error("division by zero")]
    DivisionByZero,
    #[error("not an automorphism: {0}")]
    NotAutomorphism(String),
    #[error("not additive")]
    NotAdditive,
    #[error("not differentially affine")]
    NotDiffAffine,
    #[error("elimination step with d = {d} not divisible by p = {p} on a differentially affine input")]
    PDivisibility { d: u64, p: u64 },
    #[error("triangular element required")]
    NotTriangular,
    #[error("length-3 BAB form required")]
    NotLengthThreeBab,
    #[error("P∘Q ≢ y mod a")]
    CongruenceFails,
    #[error("division by a failed")]
    IntegralityFailed,
    #[error("I not proper in J")]
    NotProperSubset,
    #[error("a must be a non-unit")]
    UnitModulus,
    #[error("set is not p-stable: {0}")]
    NotPStable(String),
    #[error("coefficient {0} does not lie in F_p[t]")]
    NotIntegral(String),
    #[error("operation needs positive characteristic")]
    NeedsPositiveCharacteristic,
    #[error("{0} is not available in characteristic {1}")]
    UnsupportedInCharacteristic(String, u64),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
}
