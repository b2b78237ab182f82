use thiserror::Error;

/// Errors raised by every fallible operation in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("modulus must be monic of degree at least 1")]
    BadModulus,
    #[error("modulus is reducible over its base field")]
    ReducibleModulus,
    #[error("unsupported field: {0}")]
    UnsupportedField(String),
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("embedding: {0}")]
    Embedding(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("axiom violated: {0}")]
    Violation(String),
    #[error("enumeration budget {budget} exceeded: at least {required} candidates required")]
    BudgetExceeded { budget: u64, required: u64 },
    #[error("size cap exceeded: {0}")]
    TooLarge(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
