//! Crate-wide error type.

use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// Tensor shapes incompatible for an operation.
    #[error("{op}: shape mismatch between {lhs:?} and {rhs:?}")]
    ShapeMismatch {
        op: &'static str,
        lhs: Vec<usize>,
        rhs: Vec<usize>,
    },

    /// A shape is invalid on its own (zero extent, wrong rank, ...).
    #[error("{op}: invalid shape {shape:?}: {reason}")]
    InvalidShape {
        op: &'static str,
        shape: Vec<usize>,
        reason: String,
    },

    /// An index (token id, row, ...) is outside its valid range.
    #[error("{context}: index {index} out of range (bound {bound})")]
    IndexOutOfRange {
        context: &'static str,
        index: usize,
        bound: usize,
    },

    /// An operation received an empty input that must be non-empty.
    #[error("{0}: input must be non-empty")]
    EmptyInput(&'static str),

    /// A character outside the tokenizer charset.
    #[error("unknown character {0:?} (not in charset)")]
    UnknownChar(char),

    /// A non-finite value where finite math is required.
    #[error("non-finite value encountered in {0}")]
    NonFinite(String),

    /// Invalid model or run configuration.
    #[error("config error: {0}")]
    Config(String),

    /// Scene construction / sample generation problem.
    #[error("data error: {0}")]
    Data(String),

    /// Checkpoint file problems, each kind distinct.
    #[error(transparent)]
    Checkpoint(#[from] CheckpointError),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

/// Checkpoint decoding errors. Each variant is a distinct, testable kind.
#[derive(Debug, Error)]
pub enum CheckpointError {
    #[error("bad checkpoint magic: expected \"BLVA\", found {found:?}")]
    BadMagic { found: [u8; 4] },

    #[error("unsupported checkpoint version {found} (expected {expected})")]
    Version { found: u32, expected: u32 },

    #[error("checkpoint parameter {name}: shape mismatch (file {found:?}, model {expected:?})")]
    ShapeMismatch {
        name: String,
        found: Vec<usize>,
        expected: Vec<usize>,
    },

    #[error("checkpoint missing parameter {0}")]
    MissingParam(String),

    #[error("corrupt checkpoint: {0}")]
    Corrupt(String),
}

pub type Result<T> = std::result::Result<T, Error>;
