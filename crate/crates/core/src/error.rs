use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("{value} is not invertible modulo {modulus}")]
    NotCoprime { value: i64, modulus: u64 },

    #[error("no prime congruent to {residue} mod {modulus} in ({lower_bound}, {search_cap}]")]
    SearchLimitExceeded {
        residue: u64,
        modulus: u64,
        lower_bound: u64,
        search_cap: u64,
    },

    #[error("{0} is not squarefree")]
    NotSquarefree(u64),

    #[error("too large: {0}")]
    TooLarge(String),

    #[error("congruence violated: {0}")]
    CongruenceViolated(String),

    #[error("condition violated: {0}")]
    ConditionViolated(String),

    #[error("the admissible interval contains no integer")]
    NoIntegerInInterval,

    #[error("r = (mpq - 1)/2 is not a prime above q (m = {m}, p = {p}, q = {q})")]
    RNotPrime { p: u64, q: u64, m: u64 },

    /// An exact division left a remainder; indicates a bug, never bad input.
    #[error("internal arithmetic failure: {0}")]
    Internal(String),
}
