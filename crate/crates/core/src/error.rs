use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("pivot {0:e} is below the elimination tolerance")]
    PivotTooSmall(f64),
    #[error("pinned block is singular or too ill-conditioned to factor")]
    SingularPinnedBlock,
    #[error("row has zero norm and cannot be compressed")]
    ZeroRow,
    #[error("no convergence after {0} iterations")]
    NoConvergence(usize),
    #[error("no convergence at order {order}: best value {best}")]
    NoConvergenceWithBest { best: f64, order: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("dimension mismatch: expected {expected:?}, got {got:?}")]
    DimensionMismatch {
        expected: (usize, usize),
        got: (usize, usize),
    },
    #[error("non-finite entry produced")]
    NonFinite,
    #[error("unsupported Bessel order {0}; only non-negative integers are implemented")]
    UnsupportedOrder(f64),
    #[error("Gram matrix of the pinned points is singular")]
    SingularGram,
    #[error("I - K is numerically singular")]
    ResolventSingular,
    #[error("Bernoulli parameter {value} out of range at step {step}")]
    InvalidMarginal { step: usize, value: f64 },
    #[error("cannot force an outcome of probability {0}")]
    ForcedImpossible(f64),
    #[error("index {0} already observed")]
    AlreadyObserved(usize),
    #[error("columns are not orthonormal (deviation {0:e})")]
    NotOrthonormal(f64),
    #[error("spectrum outside [0, 1]: eigenvalue {0}")]
    SpectrumOutOfRange(f64),
    #[error("kernel is not a projection (residual {0:e})")]
    NotProjection(f64),
    #[error("numerical breakdown: {0}")]
    NumericalBreakdown(String),
    #[error("operation not supported for this ensemble variant")]
    UnsupportedVariant,
    #[error("malformed tiling: {0}")]
    MalformedTiling(String),
    #[error("dead end while extending the DR path at cell {0:?}")]
    DeadEnd((i64, i64)),
    #[error("no eigenvalue found in time block {0}")]
    NoEigenvalueFound(usize),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
