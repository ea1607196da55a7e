use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("zero vector where a nonzero one is required")]
    ZeroVector,

    #[error("degree {found} is too low, need at least {required}")]
    DegreeTooLow { required: u32, found: u32 },

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: u32, found: u32 },

    #[error("points {first} and {second} are projectively equal")]
    DuplicatePoint { first: usize, second: usize },

    #[error("point configuration is empty")]
    EmptyConfiguration,

    #[error("H_{{{n},{d}}} has dimension {ambient}, below the required codimension {codim}")]
    AmbientTooSmall {
        n: usize,
        d: u32,
        ambient: usize,
        codim: usize,
    },

    #[error("points are not in general linear position")]
    NotGeneralPosition,

    #[error("invalid triple covering: {0}")]
    InvalidCovering(String),

    #[error("degenerate configuration: {0}")]
    Degenerate(String),

    /// Each entry names a vanishing value, e.g. `K1(u3*)`.
    #[error("genericity guard failed: {} = 0", failures.join(", "))]
    GenericityGuard { failures: Vec<String> },

    #[error("form does not vanish to order two at the point")]
    NotDoubleZero,

    #[error("roundness fails at point {0}")]
    NotRound(usize),

    #[error("point is not a partition of {0}")]
    NotPartitionPoint(u32),

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("unattainable requirement: {0}")]
    Unattainable(String),

    #[error("parse error: {0}")]
    Parse(String),
}
