use thiserror::Error;

use crate::expr::ParseError;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic 2 excluded")]
    CharacteristicTwo,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime field requires a modulus")]
    MissingPrime,
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands live in different fields ({0} and {1})")]
    FieldMismatch(String, String),
    #[error("malformed coefficient {0:?}")]
    BadCoefficient(String),
    #[error("element is not in A[z]: monomial {0} contains y")]
    NotInAz(String),
    #[error("element is not a polynomial in z: {0}")]
    NotUnivariate(String),
    #[error("element is not in the Jordan subalgebra: {0}")]
    NotJordan(String),
    #[error("element is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("operation needs a nonzero element")]
    ZeroInput,
    #[error("operation is defined on even elements only")]
    OddInput,
    #[error("invalid automorphism: {0}")]
    InvalidAutomorphism(String),
    #[error("invalid derivation: {0}")]
    InvalidDerivation(String),
    #[error("operation requires characteristic 0 (rational field)")]
    RequiresCharZero,
    #[error("operation requires a prime field")]
    RequiresPrimeField,
    #[error("no witness found up to degree {0}")]
    NoWitness(u32),
    #[error("probe failed: {0}")]
    ProbeFailed(String),
    #[error("tensor ranks differ ({0} and {1})")]
    RankMismatch(usize, usize),
    #[error("malformed serialized data: {0}")]
    Schema(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
