use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum RadoError {
    /// Parameters fall outside the supported range (e.g. c < 1, k < c, alpha <= 0).
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    /// A text input (coloring file, certificate file, rational literal) failed to parse.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// An interval coloring's pieces do not partition the declared domain.
    #[error("malformed interval coloring: {0}")]
    MalformedColoring(String),

    /// A constructed coloring failed its own validation; the construction is wrong.
    #[error("constructed coloring failed validation: {0}")]
    ConstructionInvalid(String),

    /// Brute-force enumeration was asked to go beyond its documented limit.
    #[error("enumeration cap {requested} exceeds the brute-force limit {limit}")]
    EnumerationLimit { requested: u32, limit: u32 },

    /// The backtracking search exhausted its node budget before deciding.
    #[error("search node budget exhausted before a decision was reached")]
    NodeBudget,
}

impl RadoError {
    pub(crate) fn params(message: impl Into<String>) -> Self {
        RadoError::InvalidParameters(message.into())
    }

    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        RadoError::Parse {
            line,
            message: message.into(),
        }
    }
}
