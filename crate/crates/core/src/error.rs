use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("variable count mismatch: {left} vs {right}")]
    VariableCountMismatch { left: usize, right: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("index {index} out of range (size {size})")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("polynomial is not homogeneous")]
    NotHomogeneous,

    #[error("degree {degree} too small, need at least {required}")]
    DegreeTooSmall { degree: u32, required: u32 },

    #[error("zero polynomial")]
    ZeroPolynomial,

    #[error("division is not exact")]
    InexactDivision,

    #[error("division by zero")]
    DivisionByZero,

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph is not simple: {0}")]
    NotSimple(String),

    #[error("element {0} is a loop")]
    Loop(usize),

    #[error("element {0} is a coloop")]
    Coloop(usize),

    #[error("element {0} belongs to the basis")]
    ElementInBasis(usize),

    #[error("not a basis of the matroid")]
    NotABasis,

    #[error("invalid matroid: {0}")]
    InvalidMatroid(String),

    #[error("point outside the required cone: {0}")]
    PointOutsideCone(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("precondition violated: {0}")]
    Precondition(String),
}
