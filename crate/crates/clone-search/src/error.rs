//! Crate-wide error type.

use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A manifest, annotations, pairs or query file failed to parse.
    #[error("{path}:{line}: {message}")]
    Parse {
        path: PathBuf,
        line: usize,
        message: String,
    },

    /// A clone method reference could not be resolved against the source tree.
    #[error("cannot trace {path}: {message}")]
    Trace { path: PathBuf, message: String },

    #[error("cannot read {path}: {source}")]
    ReadFile {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("cannot write {path}: {source}")]
    WriteFile {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("class {class_id} has no manual annotation")]
    MissingAnnotation { class_id: u32 },

    #[error("invalid tf-idf input: {0}")]
    Weight(String),

    #[error("cannot build index: {0}")]
    Build(String),

    /// Persisted index is unreadable, corrupt or from another version.
    #[error("index file {path}: {message}")]
    IndexFile { path: PathBuf, message: String },

    #[error("similarity {0} outside [0, 1)")]
    SimilarityRange(f64),

    #[error("unknown doc id {0}")]
    UnknownDoc(u32),

    #[error("unknown class id {0}")]
    UnknownClass(u32),

    #[error("empty query set")]
    EmptyQuerySet,

    #[error("{0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
