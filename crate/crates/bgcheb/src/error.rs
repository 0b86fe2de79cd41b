use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument lies outside the mathematical domain of the operation
    /// (invalid parameter pair, abscissa outside `[-1, 1]`, degree/count too
    /// small, and so on).
    #[error("domain error: {0}")]
    Domain(String),

    /// Two interpolation nodes coincide to within the degeneracy gap, so
    /// barycentric weights cannot be formed.
    #[error("degenerate nodes: {0}")]
    DegenerateNodes(String),

    /// A string could not be parsed as an exact rational.
    #[error("parse error: {0}")]
    Parse(String),

    /// JSON serialization or deserialization failed.
    #[error("serialization error: {0}")]
    Serialization(#[from] serde_json::Error),
}

impl Error {
    /// Shorthand for [`Error::Domain`].
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
