use thiserror::Error;

/// Errors raised by the library. Absence of roots is never an error.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("argument `{0}` must be positive")]
    ZeroArgument(&'static str),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid cycle type: {0}")]
    InvalidCycleType(String),
    #[error("associate vector must be strictly increasing positive integers")]
    InvalidAssociateVector,
    #[error("{g} is not a member of G_{m}({ell})")]
    NotInGSet { g: u64, ell: u64, m: u64 },
    #[error("n = {n} exceeds the oracle bound {bound}")]
    OracleBound { n: usize, bound: usize },
    #[error("malformed series: {0}")]
    Series(String),
}

pub type Result<T> = std::result::Result<T, Error>;
