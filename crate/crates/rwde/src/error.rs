//! Crate-wide error type.

use thiserror::Error;

#[derive(Error, Debug)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("degenerate hull: steps do not span R^{dim}, model unsupported")]
    DegenerateHull { dim: usize },

    #[error("exact hull machinery supports d <= {max}, got d = {dim}")]
    DimensionUnsupported { dim: usize, max: usize },

    #[error("invalid jump range: {0}")]
    InvalidRange(String),

    #[error("point outside the interior of U (gauge {gauge})")]
    OutsideInterior { gauge: f64 },

    #[error("target not reachable: {0}")]
    Unreachable(String),

    #[error("invalid environment spec: {0}")]
    InvalidEnv(String),

    #[error("operation requires the {expected} model, field uses {got}")]
    WrongModel { expected: String, got: String },

    #[error("memory budget exceeded: solve needs about {needed_mb} MiB, budget is {budget_mb} MiB; raise --budget-mb or shorten the horizon")]
    Budget { needed_mb: u64, budget_mb: u64 },

    #[error("kernel box too small: mass deficit {deficit:.3e} exceeds bound {bound:.3e}; retry with radius >= {suggested}")]
    BoxTooSmall {
        deficit: f64,
        bound: f64,
        suggested: i64,
    },

    #[error("slab {0} not retained in passage table")]
    SlabNotRetained(u32),

    #[error("config validation failed:\n{}", .0.join("\n"))]
    ConfigInvalid(Vec<String>),

    #[error("config parse error: {0}")]
    ConfigParse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("{0}")]
    Other(String),
}

pub type Result<T> = std::result::Result<T, Error>;
