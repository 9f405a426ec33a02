use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("inverse of zero")]
    ZeroInverse,
    #[error("denominator vanishes at the evaluation point")]
    PoleAtPoint,
    #[error("context mismatch: {0}")]
    ContextMismatch(String),
    #[error("expected an even element, got {0} parity")]
    ParityError(String),
    #[error("element has zero body and is not invertible")]
    NotInvertible,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("formal 1v added to a nonzero element")]
    NuOneSum,
    #[error("matrix is singular (no admissible pivot in column {column})")]
    Singular { column: usize },
    #[error("computed inverse failed the product check: {0}")]
    InverseCheck(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("bad chart index: {0}")]
    BadIndex(String),
    #[error("invalid space: {0}")]
    InvalidSpace(String),
    #[error("invalid nu structure: {0}")]
    InvalidNu(String),
    #[error("generic overlap of {source_chart} and {target_chart} is empty")]
    EmptyOverlap { source_chart: String, target_chart: String },
    #[error("substituted denominator has identically zero body")]
    NonInvertibleDenominator,
    #[error("matrix entry has mixed parity")]
    MixedParityEntry,
    #[error("minor is singular at the sample point")]
    SingularMinor,
    #[error("malformed supermatrix: {0}")]
    IllFormed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
