use thiserror::Error;

use crate::exactmath::QuadField;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("polynomial division leaves a nonzero remainder")]
    InexactDivision,

    #[error("reducible minimal polynomial: {0}")]
    ReducibleMinpoly(String),

    /// Roots of a rational polynomial need the quadratic extension `0`.
    /// Raised only while working over the rationals.
    #[error("roots require the extension field defined by {0}")]
    ExtensionRequest(QuadField),

    #[error("unsupported ground field: {0}")]
    UnsupportedField(String),

    #[error("basepoint analysis exceeded depth cap {0}")]
    DepthCap(usize),

    #[error("series has a fixed component: {0}")]
    FixedComponent(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("class has odd c^2 + c.k: {0}")]
    MalformedClass(String),

    #[error("h0 not supported for class {0}")]
    UnsupportedClass(String),

    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("invalid query: {0}")]
    InvalidQuery(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
