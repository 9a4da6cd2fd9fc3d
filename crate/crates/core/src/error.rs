use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("group element index {index} out of range for group of order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("unsupported group: {0}")]
    UnsupportedGroup(String),
    #[error("scalar ring mismatch: {0}")]
    RingMismatch(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("structure constant is not unital at ({0}, {1})")]
    NotUnital(usize, usize),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("unknown indeterminate: {0}")]
    UnknownVariable(String),
    #[error("polynomial is not univariate")]
    NotUnivariate,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("exponent {0} is not an integer")]
    NonIntegerExponent(String),
    #[error("group is not abelian")]
    NonAbelian,
    #[error("group order {0} is a power of two")]
    PowerOfTwoOrder(usize),
    #[error("pattern mismatch: {0}")]
    PatternMismatch(String),
    #[error("degree {degree} exceeds cap {cap}")]
    DegreeCap { degree: usize, cap: usize },
    #[error("too many variables: {count} (cap {cap})")]
    VariableCap { count: usize, cap: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("element is not invertible")]
    NotInvertible,
    #[error("{0} is not a rational square")]
    NotSquareRational(String),
    #[error("invalid modulus {0}: an odd prime is required")]
    InvalidModulus(u64),
    #[error("json: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
