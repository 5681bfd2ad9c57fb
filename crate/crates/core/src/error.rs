use thiserror::Error;

/// Errors produced by graph construction, solving and document parsing.
///
/// Vertex numbers carried by the variants are 1-based labels, matching the
/// way vertices are displayed everywhere outside the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {label} is not in a graph with {vertex_count} vertices")]
    InvalidVertex { label: usize, vertex_count: usize },

    #[error("vertex label {label} is invalid; labels start at 1")]
    InvalidLabel { label: usize },

    #[error("vertex {label} is assigned a strength more than once")]
    DuplicateVertex { label: usize },

    #[error("vertex {label} is unreachable from vertex {from}; the graph must be connected")]
    UnreachableVertex { label: usize, from: usize },

    #[error("invalid edge [{u}, {v}]: {reason}")]
    InvalidEdge { u: usize, v: usize, reason: String },

    #[error("invalid family parameter: {parameter} = {value}, must be {bound}")]
    InvalidFamilyParameter {
        parameter: &'static str,
        value: i64,
        bound: String,
    },

    #[error("invalid strength {strength} at vertex {label}; strengths must be at least 1")]
    InvalidStrength { label: usize, strength: u64 },

    #[error("declared cost {declared} does not match the sum of strengths {actual}")]
    CostMismatch { declared: u64, actual: u64 },

    #[error("no dominating broadcast of cost at most {bound}")]
    BudgetExhausted { bound: u32 },

    #[error("invalid range: {0}")]
    InvalidRange(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("unsupported document version {0:?}")]
    UnsupportedVersion(String),
}

impl Error {
    /// Short machine-readable tag, used in JSON error reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidVertex { .. } => "invalid-vertex",
            Error::InvalidLabel { .. } => "invalid-label",
            Error::DuplicateVertex { .. } => "duplicate-vertex",
            Error::UnreachableVertex { .. } => "unreachable-vertex",
            Error::InvalidEdge { .. } => "invalid-edge",
            Error::InvalidFamilyParameter { .. } => "invalid-family-parameter",
            Error::InvalidStrength { .. } => "invalid-strength",
            Error::CostMismatch { .. } => "cost-mismatch",
            Error::BudgetExhausted { .. } => "budget-exhausted",
            Error::InvalidRange(_) => "invalid-range",
            Error::Parse { .. } => "parse-error",
            Error::UnsupportedVersion(_) => "unsupported-version",
        }
    }

    pub(crate) fn parameter(parameter: &'static str, value: i64, bound: impl Into<String>) -> Self {
        Error::InvalidFamilyParameter {
            parameter,
            value,
            bound: bound.into(),
        }
    }
}

impl From<serde_json::Error> for Error {
    fn from(err: serde_json::Error) -> Self {
        Error::Parse {
            line: err.line(),
            column: err.column(),
            message: err.to_string(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
