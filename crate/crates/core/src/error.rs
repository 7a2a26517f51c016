use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("empty collection")]
    Empty,
    #[error("matrices of mixed sizes in one collection")]
    MixedSizes,
    #[error("matrix has rank {0}, expected rank one")]
    NotRankOne(usize),
    #[error("element of rank {0} where rank at most one is required")]
    RankTooHigh(usize),
    #[error("real matrix required")]
    ComplexInput,
    #[error("entrywise nonnegative matrix required")]
    NegativeEntry,
    #[error("cone contains a line; extremality degenerates on cones containing lines")]
    NotPointed,
    #[error(
        "power iteration did not converge after {iterations} iterations (residual {residual:e})"
    )]
    NonConvergence { iterations: usize, residual: f64 },
    #[error("irreducibility requires n >= 2, got n = {0}")]
    TooSmall(usize),
    #[error("matrix is singular")]
    Singular,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
