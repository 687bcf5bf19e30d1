use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid space: {0}")]
    InvalidSpace(String),

    #[error("graph is disconnected ({components} components)")]
    Disconnected { components: usize },

    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    #[error("field length {got} does not match vertex count {expected}")]
    ShapeMismatch { expected: usize, got: usize },

    #[error("eigensolver failure: {0}")]
    Eigensolver(String),

    #[error("spectral function produced a non-finite value at eigenvalue {eigenvalue}")]
    NonFiniteSpectral { eigenvalue: f64 },

    #[error("non-finite value produced by {0}")]
    NonFinite(&'static str),

    #[error("empty radius list")]
    EmptyRadii,

    #[error("insufficient data for fit: {0}")]
    InsufficientData(String),

    #[error("unknown hypothesis tag `{0}`; valid tags: {1}")]
    UnknownTag(String, String),

    #[error("unknown nonlinearity `{0}`; registry: {1}")]
    UnknownNonlinearity(String, String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
