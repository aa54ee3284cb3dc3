//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// An argument violated a documented precondition.
    #[error("domain error: {0}")]
    Domain(String),

    /// A separatrix failed to close up on a cone point within the trace bound.
    #[error("direction not periodic within bound: {0}")]
    NonPeriodicWithinBound(String),

    /// Segment development or refolding exceeded its iteration cap.
    #[error("development exceeded iteration bound: {0}")]
    DevelopmentExceeded(String),

    /// A three-cylinder configuration violated one of its hypotheses.
    #[error("exclusion hypothesis ({index}) failed: {detail}")]
    HypothesisFailed { index: u8, detail: String },

    /// A point lies outside the polygon or cylinder it was claimed to be in.
    #[error("point outside {0}")]
    OutsideRegion(String),

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
