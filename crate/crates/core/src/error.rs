use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("cannot evaluate at q = 0: polynomial has negative exponents")]
    ZeroEvaluation,
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("degree {degree} exceeds the configured bound {bound}")]
    DegreeBound { degree: usize, bound: usize },
    #[error("enumeration of {count} elements exceeds the budget of {budget}")]
    BudgetExceeded { count: u128, budget: u64 },
    #[error("set partition is nesting")]
    Nesting,
    #[error("matrix is not unipotent")]
    NotUnipotent,
    #[error("singular linear system")]
    Singular,
    #[error("not a homomorphism: {0}")]
    NotAHomomorphism(String),
}

pub type Result<T> = std::result::Result<T, Error>;
