use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial has no terms")]
    EmptySupport,
    #[error("polynomial does not vanish at the origin")]
    OriginInSupport,
    #[error("ambient dimension {0} is not supported (expected 2 or 3)")]
    UnsupportedDimension(usize),
    #[error("exponent vector {0:?} does not match the ambient dimension or is negative")]
    BadExponent(Vec<i64>),
    #[error("face is not compact")]
    NotCompact,
    #[error("normals are linearly dependent")]
    DependentNormals,
    #[error("face is not a vertex")]
    NotAVertex,
    #[error("facets around a vertex do not form a single cycle")]
    BrokenFan,
    #[error("face has dimension {found}, expected {expected}")]
    WrongDim { expected: usize, found: usize },
    #[error("numerator is not divisible by {0}")]
    NotDivisible(String),
    #[error("operation requires numeric (parameter-free) input")]
    NotNumeric,
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid family parameters: {0}")]
    InvalidParams(String),
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("polynomial is identically zero")]
    ZeroPolynomial,
}
