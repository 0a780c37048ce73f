//! Error type shared across the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("non-finite value: {0}")]
    NonFinite(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("SPD factorization failed: {0}")]
    Factorization(String),

    #[error("layer {0} has zero l1 norm, cannot normalize")]
    ZeroLayer(usize),

    #[error("layer {layer}: input dim {got} does not match previous output dim {expected}")]
    DimensionChain {
        layer: usize,
        expected: usize,
        got: usize,
    },

    #[error("file format error: {0}")]
    Format(String),

    #[error("layer {layer} solve failed: {message}")]
    Solver { layer: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
