use thiserror::Error;

/// Errors raised by the algebra engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("structural mismatch: {0}")]
    Structural(String),
    #[error("operands live in different polynomial rings")]
    RingMismatch,
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("division by zero")]
    DivisionByZero,
    #[error("linear form is zero")]
    ZeroLinearForm,
    #[error("ideal generator is zero")]
    ZeroGenerator,
    #[error("ideal has no generators")]
    EmptyIdeal,
    #[error("ideal is not homogeneous")]
    NotHomogeneous,
    #[error("ideal is not m-primary")]
    NotMPrimary,
    #[error("ideal is not monomial")]
    NotMonomial,
    #[error("exponent {0} exceeds the per-variable bound of 64")]
    ExponentOverflow(u32),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("random draws disagree after {retries} retries: {what}")]
    Genericity { what: String, retries: u32 },
}

pub type Result<T> = std::result::Result<T, AlgebraError>;
