use thiserror::Error;

/// Errors raised by the algebra kernel and the decision procedures built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("coefficient domain mismatch: {0} vs {1}")]
    DomainMismatch(String, String),

    #[error("operands live in different rings")]
    RingMismatch,

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("{0} is not invertible in {1}")]
    NotInvertible(String, String),

    #[error("negative exponent {0}")]
    NegativeExponent(i64),

    #[error("exponent overflow")]
    ExponentOverflow,

    #[error("the zero polynomial has no degree")]
    ZeroPolynomial,

    #[error("polynomial is not homogeneous under the ring weights: {0}")]
    NonHomogeneous(String),

    #[error("Gröbner computations are not supported over the integers")]
    IntegerGroebner,

    #[error("invalid modulus {0}: must be a prime below 2^31")]
    InvalidModulus(u64),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("Gröbner computation exceeded the degree bound {0}")]
    DegreeLimit(i64),

    #[error("computation exceeded the time limit")]
    Timeout,

    #[error("saturation did not stabilize within {0} steps")]
    SaturationCap(usize),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn invariant(msg: impl Into<String>) -> Self {
        Error::Invariant(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
