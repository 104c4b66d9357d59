use thiserror::Error;

/// Errors raised by the exact arithmetic and the closed-form evaluators.
///
/// `NotRational`, `NonScalarNorm`, `InexactDivision` and `Inconsistent`
/// signal that an identity which must hold exactly did not; they never fire
/// on a correct evaluation path.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("expected a rational value, found {0}")]
    NotRational(String),

    #[error("q * conj(q) has a nonzero vector part: {0}")]
    NonScalarNorm(String),

    #[error("division by {divisor} left a non-dyadic value {value}")]
    InexactDivision { divisor: i64, value: String },

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
