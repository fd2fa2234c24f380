use thiserror::Error;

/// Errors raised by the algebra kernels.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at t = {0}")]
    Pole(String),
    #[error("duplicate abscissa {0} in interpolation data")]
    DuplicateAbscissa(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),
    #[error("signature mismatch: {0}")]
    SignatureMismatch(String),
    #[error("flavor mismatch: {0}")]
    FlavorMismatch(String),
    #[error("unsupported for this flavor: {0}")]
    Unsupported(String),
    #[error("not an endomorphism: {0}")]
    NotEndomorphism(String),
    #[error("not an idempotent")]
    NotIdempotent,
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("non-generic evaluation point: {0}")]
    NonGeneric(String),
    #[error("invalid partition data: {0}")]
    InvalidPartition(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("schema error at {path}: {msg}")]
    Schema { path: String, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
