use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// A precondition on the arguments was violated.
    #[error("domain error: {0}")]
    Domain(String),

    /// No closed-form row covers the requested combination. Distinct from a
    /// bound of zero: zero is a valid bound, this means "no statement made".
    #[error("no applicable bound: {0}")]
    BoundNotApplicable(String),

    /// Breadth-first enumeration exceeded its element budget.
    #[error("enumeration budget of {budget} elements exceeded")]
    BudgetExceeded { budget: usize },

    /// A group input file could not be parsed.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// Two independent computation routes disagreed. Must never fire.
    #[error("internal consistency failure: {0}")]
    Internal(String),

    /// Requested feature is intentionally not provided.
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
