//! Error type shared across the pipeline.

use std::path::PathBuf;

/// Category used by the CLI to derive process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorCategory {
    /// Bad arguments, bad config, values out of contract.
    Input,
    /// Unreadable, corrupt or mismatched data files.
    Data,
    /// Everything else (IO failures, internal invariant breaks).
    Internal,
}

#[derive(Debug, thiserror::Error)]
pub enum DiftError {
    #[error("rejected input: {0}")]
    RejectedInput(String),

    #[error("config error: {0}")]
    Config(String),

    #[error("corrupt file {path}: {reason}")]
    CorruptFile { path: PathBuf, reason: String },

    #[error("metadata mismatch between {left} and {right}:\n{diff}")]
    MetadataMismatch {
        left: String,
        right: String,
        diff: String,
    },

    #[error("dataset too sparse: {0}")]
    DatasetTooSparse(String),

    #[error("insufficient data: {0}")]
    InsufficientData(String),

    #[error("degenerate data: {0}")]
    DegenerateData(String),

    #[error("non-finite loss at step {step}: {detail}")]
    NonFiniteLoss { step: u64, detail: String },

    #[error("io error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl DiftError {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        DiftError::Io {
            path: path.into(),
            source,
        }
    }

    pub fn corrupt(path: impl Into<PathBuf>, reason: impl Into<String>) -> Self {
        DiftError::CorruptFile {
            path: path.into(),
            reason: reason.into(),
        }
    }

    pub fn category(&self) -> ErrorCategory {
        match self {
            DiftError::RejectedInput(_) | DiftError::Config(_) => ErrorCategory::Input,
            DiftError::CorruptFile { .. }
            | DiftError::MetadataMismatch { .. }
            | DiftError::DatasetTooSparse(_)
            | DiftError::InsufficientData(_)
            | DiftError::DegenerateData(_) => ErrorCategory::Data,
            DiftError::NonFiniteLoss { .. } | DiftError::Io { .. } => ErrorCategory::Internal,
        }
    }
}

pub type Result<T> = std::result::Result<T, DiftError>;
