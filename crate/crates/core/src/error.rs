use thiserror::Error;

/// Errors raised by the polynomial, factorization, and search routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("gcd(0, 0) is undefined")]
    GcdOfZeros,

    #[error("{op}: the zero polynomial is not allowed")]
    ZeroPolynomial { op: &'static str },

    #[error("{op}: constant polynomials are not allowed")]
    ConstantPolynomial { op: &'static str },

    #[error("{op}: the polynomial must have a nonzero constant term")]
    ZeroConstantTerm { op: &'static str },

    #[error("{base} and {modulus} are not coprime")]
    NotCoprime { base: u64, modulus: u64 },

    #[error("cyclotomic index {0} is even; only odd indices are supported over GF(2)")]
    EvenCyclotomicIndex(u64),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
}

pub type Result<T> = std::result::Result<T, Error>;
