use thiserror::Error;

/// Errors raised by generators, constructors, verifiers and the text formats.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("malformed rotation system: {0}")]
    MalformedRotation(String),

    #[error("not a Halin graph: {0}")]
    NotHalin(String),

    /// The characteristic tree has a single internal vertex; use the wheel layout.
    #[error("Halin graph is a wheel")]
    IsWheel,

    #[error("graph does not belong to the {0} family")]
    FamilyMismatch(&'static str),

    #[error("drawing is not planar: {0}")]
    NonPlanar(String),

    #[error("invalid Schnyder wood: {0}")]
    InvalidWood(String),

    #[error("degenerate geometry: {0}")]
    Degenerate(String),

    #[error("drawing is not an alpha-Schnyder drawing: {0}")]
    AlphaViolation(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}
