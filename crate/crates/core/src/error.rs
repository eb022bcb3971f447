use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("width must be a finite value >= 1e-8, got {0}")]
    InvalidWidth(f64),

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("grid [{x_min}, {x_max}] does not cover [{need_min}, {need_max}]")]
    GridTooNarrow {
        x_min: f64,
        x_max: f64,
        need_min: f64,
        need_max: f64,
    },

    #[error("states live on different grids")]
    GridMismatch,

    #[error("simpson rule needs an odd number of samples (>= 3), got {0}")]
    BadSampleCount(usize),

    #[error("expected {expected} amplitudes, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("vector has zero norm")]
    ZeroVector,

    #[error("registry is empty")]
    EmptyRegistry,

    #[error("duplicate name '{0}'")]
    DuplicateName(String),

    #[error("names must be non-empty")]
    EmptyName,

    #[error("value out of domain: {0}")]
    DomainError(String),

    #[error("dimension mismatch: {0} vs {1} axes")]
    DimensionMismatch(usize, usize),
}
