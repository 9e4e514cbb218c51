//! Error types shared across the crate.

use crate::taxonomy::Language;
use thiserror::Error;

/// Errors produced while parsing or extracting features.
#[derive(Debug, Error)]
pub enum ExtractError {
    #[error("unsupported language: {0}")]
    UnsupportedLanguage(String),
    #[error("parse failure in {path}: {detail}")]
    ParseFailure { path: String, detail: String },
    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

/// Errors produced by the knowledge store and refinement pipeline.
#[derive(Debug, Error)]
pub enum StoreError {
    #[error("integrity violation: {0}")]
    IntegrityViolation(String),
    #[error("schema mismatch: {0}")]
    SchemaMismatch(String),
    #[error("no candidate files survive refinement")]
    EmptyDataset,
    #[error("store io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("csv error in {path}: {source}")]
    Csv {
        path: String,
        #[source]
        source: csv::Error,
    },
    #[error("manifest error: {0}")]
    Manifest(String),
}

impl StoreError {
    pub fn io(path: impl Into<String>, source: std::io::Error) -> StoreError {
        StoreError::Io { path: path.into(), source }
    }

    pub fn csv(path: impl Into<String>, source: csv::Error) -> StoreError {
        StoreError::Csv { path: path.into(), source }
    }
}

/// Errors produced by classifier training and prediction.
#[derive(Debug, Error)]
pub enum LearnError {
    #[error("training requires at least two distinct labels for {0}")]
    DegenerateLabels(String),
    #[error("vector width {got} does not match training width {expected}")]
    WidthMismatch { expected: usize, got: usize },
    #[error("k={k} exceeds training size {n}")]
    KTooLarge { k: usize, n: usize },
    #[error("training set is empty")]
    EmptyTrainingSet,
    #[error("invalid model configuration: {0}")]
    InvalidConfig(String),
    #[error("model deserialization failed: {0}")]
    Serialization(String),
}

/// Errors produced by the evaluation harness.
#[derive(Debug, Error)]
pub enum EvalError {
    #[error("class {label} has {count} members, fewer than k={k}")]
    ClassTooSmall { label: String, count: usize, k: usize },
    #[error("fold {fold}: {source}")]
    Fold {
        fold: usize,
        #[source]
        source: LearnError,
    },
    #[error(transparent)]
    Learn(#[from] LearnError),
    #[error("phase-2 model for characteristic '{0}' was requested but not trained")]
    MissingPhase2Model(String),
    #[error("k must be at least 2, got {0}")]
    InvalidK(usize),
}

/// Records why one language had no survivors during candidate selection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmptyBand {
    pub language: Language,
}
