use thiserror::Error;

/// Failures raised by the exact rings, the series kernels and the registry.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("inexact division: {0}")]
    InexactDivision(String),
    #[error("series has no invertible constant term: {0}")]
    NonUnitConstant(String),
    #[error("inner series of a composition must have zero constant term, found {0}")]
    NonZeroConstant(String),
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("pole in hypergeometric denominator at k = {0}")]
    Pole(usize),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("unknown identity id: {0}")]
    UnknownId(String),
}

pub type Result<T> = std::result::Result<T, AlgebraError>;
