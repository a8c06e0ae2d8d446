use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arity mismatch: {left} vs {right} variables")]
    ArityMismatch { left: usize, right: usize },

    #[error("division by zero")]
    DivisionByZero,

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("syntax error on line {line}: {msg}")]
    Syntax { line: usize, msg: String },

    #[error("polynomial is not univariate in the first variable")]
    NotUnivariate,

    #[error("zero polynomial where a nonzero one is required")]
    ZeroPolynomial,

    #[error("empty generator list")]
    EmptyGenerators,

    #[error("basis has not been verified as a strong Groebner basis")]
    UnverifiedBasis,

    #[error("invalid term order: {0}")]
    InvalidOrder(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("region has a cell with a negative coordinate: ({0}, {1})")]
    NegativeCoordinate(i64, i64),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("unsupported format: {0}")]
    UnsupportedFormat(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
