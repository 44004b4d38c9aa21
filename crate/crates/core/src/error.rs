use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("genus must be at least 3, got {0}")]
    InvalidGenus(usize),
    #[error("expected a square matrix, got {rows}x{cols}")]
    NonSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("polynomial involves v-variables")]
    InvolvesV,
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("not a canonical relation: polynomial does not vanish on the rational normal curve")]
    NotInIdeal,
    #[error("internal contract violated: {0}")]
    Internal(String),
    #[error("functional must be nonzero")]
    ZeroFunctional,
    #[error("inexact division by a power of pi: {0}")]
    InexactDivision(String),
    #[error("family is not in normalized form: {0}")]
    NotNormalized(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
