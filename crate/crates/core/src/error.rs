use thiserror::Error;

/// Errors raised by the diagram-algebra kernel.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("algebra mismatch: {0}")]
    AlgebraMismatch(String),

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("denominator vanishes at the specialization point: {0}")]
    DenominatorVanishes(String),

    #[error("specialization failure (integrality violated): {0}")]
    SpecializationFailure(String),

    #[error("separation failure: {0}")]
    SeparationFailure(String),

    #[error("non-invertible Q-series in the KLR construction: {0}")]
    NonInvertibleQ(String),

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}
