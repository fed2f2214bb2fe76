use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("family check failed for {family} with q = {q}: {reason}")]
    InvalidFamily {
        family: String,
        q: u64,
        reason: String,
    },

    #[error("malformed permutation: {0}")]
    MalformedPermutation(String),

    #[error("cap `{cap}` exceeded: {value} > {limit}")]
    CapExceeded {
        cap: &'static str,
        value: u64,
        limit: u64,
    },

    #[error("division by zero in field arithmetic")]
    ZeroInverse,

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("solvability precondition violated: {0}")]
    NotSolvable(String),

    #[error("construction check failed: {0}")]
    Construction(String),
}
