use crate::point::BiIndex;

/// Errors shared across the library.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("denominator must be nonzero")]
    ZeroDenominator,
    #[error("invalid rational literal `{0}` (expected `int` or `int/positive-int`)")]
    ParseRational(String),
    #[error("size mismatch: expected {expected}, got {actual}")]
    SizeMismatch { expected: usize, actual: usize },
    #[error("n must be at least 1")]
    InvalidN,
    #[error("the double index (0,0) is not allowed")]
    ZeroBiIndex,
    #[error("permutation images must be a bijection of 0..n")]
    InvalidPermutation,
    #[error("interpolation nodes must be pairwise distinct")]
    DuplicateNodes,
    #[error("index {0} is not a member of the set")]
    IndexNotInSet(BiIndex),
    #[error("n must be even, got {0}")]
    OddN(usize),
    #[error("exponent must satisfy 1 <= j <= {n}, got {j}")]
    ExponentOutOfRange { j: u32, n: usize },
    #[error("grid must contain at least one value")]
    EmptyGrid,
    #[error("axis must be `x` or `y`, got `{0}`")]
    InvalidAxis(String),
    #[error("invalid point file: {0}")]
    PointFile(String),
    #[error("invalid index `{0}` (expected `j,k`)")]
    ParseIndex(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
