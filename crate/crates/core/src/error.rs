use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("matrix dimensions must be positive, got {rows}x{cols}")]
    EmptyShape { rows: usize, cols: usize },

    #[error("entry ({row}, {col}) is out of range for a {rows}x{cols} matrix")]
    OutOfRange {
        row: usize,
        col: usize,
        rows: usize,
        cols: usize,
    },

    #[error("entry ({row}, {col}) is observed more than once")]
    DuplicateEntry { row: usize, col: usize },

    #[error("non-finite value at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("column {col} is out of range for a matrix with {cols} columns")]
    ColumnOutOfRange { col: usize, cols: usize },

    #[error("cannot normalize a zero or non-finite vector")]
    ZeroVector,

    #[error("vector is not unit norm (norm = {norm})")]
    NotUnitNorm { norm: f64 },

    #[error("direction is not orthogonal to the base point (inner product = {inner})")]
    NotTangent { inner: f64 },

    #[error("gradient vanished (norm {norm:e}); the current point is stationary")]
    VanishingGradient { norm: f64 },

    #[error("atomic profile of column {col} is degenerate")]
    DegenerateProfile { col: usize },

    #[error("atomic profile of column {col} is constant along the geodesic")]
    ConstantProfile { col: usize },

    #[error("invalid configuration: {0}")]
    Config(String),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
