use thiserror::Error;

/// Errors raised by the library. Mathematical failures (a residual that does
/// not vanish) are never errors; they are reported through residual reports.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("dimension must be at least 1")]
    ZeroDimension,

    #[error("algebra has no unit")]
    NoUnit,

    #[error("r-matrix is not antisymmetric at ({i}, {j})")]
    NotAntisymmetric { i: usize, j: usize },

    #[error("malformed rational literal {0:?}")]
    InvalidRational(String),

    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),

    #[error("unknown catalog algebra {0:?}")]
    UnknownAlgebra(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("extension does not restrict to the bracket on symmetric tensors at ({i}, {j}; {k}, {l})")]
    InconsistentExtension {
        i: usize,
        j: usize,
        k: usize,
        l: usize,
    },

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("point is not invertible in the algebra (|det L_x| = {0:e})")]
    NotInvertible(f64),

    #[error("sample coordinates must be positive, got ({0}, {1})")]
    NonPositiveSample(f64, f64),

    #[error("sampling produced no invertible pairs")]
    NoInvertibleSamples,

    #[error("invalid sample plan: {0}")]
    InvalidSamplePlan(String),

    #[error("malformed input: {0}")]
    Format(String),

    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Format(e.to_string())
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
