use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    DegreeZero,
    #[error("{what} {value} exceeds the configured bound {bound}")]
    BoundExceeded {
        what: &'static str,
        value: u64,
        bound: u64,
    },
    #[error("the zero element has no discrete logarithm")]
    ZeroElement,
    #[error("GF({q}) does not contain the {n}-th roots of unity")]
    RootsOfUnityMissing { n: u64, q: u64 },
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("division by the zero polynomial")]
    DivisionByZeroPolynomial,
    #[error("the zero polynomial has no factorization")]
    ZeroPolynomial,
    #[error("the zero function has no valuation")]
    ZeroFunction,
    #[error("function is not a unit at {place}")]
    NotAUnit { place: String },
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("invalid group table: {0}")]
    InvalidTable(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("order condition failed: {0}")]
    OrderConditionFailed(String),
    #[error("certificate step {step} failed: recomputed {recomputed}, expected {expected}")]
    StepFailed {
        step: usize,
        recomputed: String,
        expected: String,
    },
    #[error("invalid input: {0}")]
    Invalid(String),
}

impl Error {
    pub(crate) fn syntax(pos: usize, msg: impl Into<String>) -> Self {
        Error::Syntax {
            pos,
            msg: msg.into(),
        }
    }
}
