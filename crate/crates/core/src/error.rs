//! Crate-wide error type.

use thiserror::Error;

/// Position-annotated parse failure.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at {line}:{column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("space too large: {assignments} assignments exceed the cap of {cap}")]
    SpaceTooLarge { assignments: u128, cap: u64 },

    #[error("team-space search over {assignments} assignments exceeds the {limit}-assignment search limit")]
    SearchTooLarge { assignments: u128, limit: u32 },

    #[error("scope mismatch: {left:?} vs {right:?}")]
    ScopeMismatch { left: Vec<String>, right: Vec<String> },

    #[error("free variable '{var}' is not in the team scope")]
    ScopeViolation { var: String },

    #[error("variable '{var}' must not be in the team scope here")]
    VariableInScope { var: String },

    #[error("unbound variable '{name}'")]
    UnboundVariable { name: String },

    #[error("unknown {kind} '{name}'")]
    UnknownSymbol { kind: &'static str, name: String },

    #[error("'{name}' expects {expected} argument(s), got {got}")]
    ArityMismatch { name: String, expected: usize, got: usize },

    #[error("tuple length mismatch: {left} vs {right}")]
    TupleLengthMismatch { left: usize, right: usize },

    #[error("row has {got} entries but the scope has {expected} variables")]
    RowLengthMismatch { expected: usize, got: usize },

    #[error("invalid structure: {}", .0.join("; "))]
    InvalidStructure(Vec<String>),

    #[error("theory must contain at least one formula")]
    EmptyTheory,

    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
