//! Error types shared across the crate.

use thiserror::Error;

/// Errors produced by the summarization pipeline and its tools.
#[derive(Debug, Error)]
pub enum Error {
    /// The document contains no body sentences after parsing.
    #[error("document has no body sentences")]
    EmptyDocument,

    /// Feature selection produced no features.
    #[error("feature selection produced an empty feature set ({0})")]
    EmptyFeatureSet(String),

    /// Every sentence vector was all-false; nothing can be classified.
    #[error("no sentence contains any selected feature")]
    NoClassifiableSentences,

    /// Malformed input that could not be parsed.
    #[error("parse error at byte {offset} (line {line}, column {column}): {message}")]
    Parse {
        offset: usize,
        line: usize,
        column: usize,
        message: String,
    },

    /// A parameter is outside its documented range.
    #[error("invalid parameter `{name}`: {message}")]
    Parameter { name: &'static str, message: String },

    /// A mathematical precondition was violated.
    #[error("domain error: {0}")]
    Domain(String),

    /// Structurally invalid input files (lexicon, stoplist, results CSV, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Stable machine-readable name for this error kind, used by the CLI's
    /// JSON error output.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::EmptyDocument => "EmptyDocument",
            Error::EmptyFeatureSet(_) => "EmptyFeatureSet",
            Error::NoClassifiableSentences => "NoClassifiableSentences",
            Error::Parse { .. } => "ParseError",
            Error::Parameter { .. } => "ParameterError",
            Error::Domain(_) => "DomainError",
            Error::InvalidInput(_) => "InvalidInput",
            Error::Io(_) => "IoError",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
