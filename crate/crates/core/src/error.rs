use thiserror::Error;

/// Errors raised by the counting library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("invalid curve data: {0}")]
    InvalidCurve(String),

    #[error("incompatible S: {0}")]
    IncompatibleS(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A series coefficient was requested past the truncation order.
    #[error("series read at order {requested} beyond truncation {truncation}")]
    Truncation { requested: usize, truncation: usize },

    #[error("budget exceeded: {what} needs {needed} steps, budget is {budget}")]
    BudgetExceeded {
        what: String,
        needed: String,
        budget: u64,
    },

    #[error("configuration error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
