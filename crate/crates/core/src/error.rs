use thiserror::Error;

/// Errors raised anywhere in the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// A parameter lies outside the domain of the requested operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The input is structurally too small for the operation (e.g. empty graph).
    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("graph6 parse error at byte {offset}: {reason}")]
    Parse { offset: usize, reason: String },

    #[error("invalid bipartition: edge {u}-{v} lies inside one part")]
    InvalidBipartition { u: usize, v: usize },

    /// An exact solver or enumerator was asked to exceed its configured budget.
    #[error("scale limit exceeded: {0}")]
    Scale(String),

    /// A cross-check that must never fail did fail.
    #[error("internal consistency error: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
