use thiserror::Error;

/// Errors raised by constructors and operations whose domain is restricted.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error("non-finite value {0}")]
    NonFinite(f64),

    #[error("length must be non-negative, got {0}")]
    NegativeLength(f64),

    #[error("direction vector must be non-zero")]
    ZeroVector,

    #[error("ray endpoint coincides with the vertex")]
    CoincidentPoints,

    #[error("angle {value} is outside the domain {domain}")]
    AngleOutOfDomain { value: f64, domain: &'static str },

    #[error("degenerate triangle: vertices are collinear or coincident")]
    DegenerateTriangle,

    #[error("parallax angle must be positive, got {0}")]
    NonPositiveParallax(f64),

    #[error("invalid parallax configuration: {0}")]
    InvalidScene(String),
}

pub type Result<T> = std::result::Result<T, GeometryError>;

pub(crate) fn finite(value: f64) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(GeometryError::NonFinite(value))
    }
}
