use thiserror::Error;

/// Errors surfaced by scenario construction, model evaluation, and the solvers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("structurally infeasible: {0}")]
    StructuralInfeasibility(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("numerical failure in {context}: {detail}")]
    Numerical { context: String, detail: String },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
