use thiserror::Error;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("structure constants violate antisymmetry at ({0}, {1})")]
    Antisymmetry(usize, usize),
    #[error("structure constants violate the Jacobi identity on basis triple ({0}, {1}, {2})")]
    Jacobi(usize, usize, usize),
    #[error("subspace is not closed under the bracket")]
    NotSubalgebra,
    #[error("subspace is not an ideal")]
    NotIdeal,
    #[error("matrix subspace is not closed under multiplication")]
    NotProductClosed,
    #[error("action is not a derivation-valued homomorphism: {0}")]
    NotDerivationAction(String),
    #[error("algebra is not semisimple")]
    NotSemisimple,
    #[error("subalgebra is not nil")]
    NotNil,
    #[error("invalid root system descriptor: {0}")]
    InvalidCartanType(String),
    #[error("unknown example: {0}")]
    UnknownExample(String),
    #[error("invalid example parameters: {0}")]
    InvalidExample(String),
    #[error("independent computations disagree: {0}")]
    OracleMismatch(String),
    #[error("internal self-check failed: {0}")]
    SelfCheck(String),
    #[error("U(S) is not a subspace for this subalgebra (non-algebraic input): {0}")]
    NonAlgebraic(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
