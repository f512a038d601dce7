use thiserror::Error;

/// Everything that can go wrong when building or evaluating a group instance.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),

    #[error("{0} is not prime")]
    NotPrime(String),

    #[error("{r} divides {q}, so {q} has no multiplicative order modulo {r}")]
    NotCoprime { q: String, r: String },

    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("{0} is outside the supported range")]
    OutOfScope(String),

    #[error("no primitive prime divisor of {q}^{e} - 1")]
    NoPrimitivePrime { q: u64, e: u32 },

    #[error("unknown group name `{0}`")]
    UnknownName(String),

    #[error("{0}")]
    Input(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
