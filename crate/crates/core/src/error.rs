use std::fmt;

use crate::model::TypeIndicator;

/// A syntax error at a byte offset of the parsed text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(offset: usize, message: impl Into<String>) -> Self {
        ParseError {
            offset,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at offset {}: {}", self.offset, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(#[from] ParseError),

    #[error("parse error in entry `{key}`: {source}")]
    EntryParse { key: String, source: ParseError },

    #[error("profile index {0} is outside [0, 12^8)")]
    ProfileIndexOutOfRange(u64),

    #[error("formula contains negation; use the complement-aware `models` path")]
    NegationUnsupported,

    #[error("interpretation document: {0}")]
    Document(String),

    #[error("row for {0} is unsatisfiable")]
    UnsatisfiableRow(TypeIndicator),

    #[error("consistency violation: {left} and {right} have no common model")]
    ConsistencyViolation { left: String, right: String },

    #[error("cache fingerprint mismatch: cache has {found}, interpretation has {expected}")]
    FingerprintMismatch { expected: String, found: String },

    #[error("corrupt cache: {0}")]
    CorruptCache(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
