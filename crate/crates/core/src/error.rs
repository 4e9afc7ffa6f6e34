use thiserror::Error;

/// Errors raised by the exact kernel, the diagram catalog and the verifiers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("denominator vanishes at t = 0, no power series expansion")]
    PoleAtOrigin,

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("expected nullity 1, found nullity {nullity}")]
    Rank { nullity: usize },

    #[error("kernel vector is not strictly positive: {0}")]
    NonPositiveKernel(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("inadmissible folding: {0}")]
    Folding(String),

    #[error("excluded diagram: {0}")]
    ExcludedDiagram(String),

    #[error("unsupported family: {0}")]
    UnsupportedFamily(String),

    #[error("catalog corruption: {0}")]
    CatalogCorruption(String),

    #[error("missing parameter: {0}")]
    MissingParameter(&'static str),

    /// A proven identity failed; this signals a bug, never bad input.
    #[error("identity violation: {0}")]
    IdentityViolation(String),

    #[error("generator set closes to {got} elements, expected {expected}")]
    GeneratorSet { expected: usize, got: usize },

    #[error("numerical drift {deviation:e} exceeds tolerance")]
    NumericalDrift { deviation: f64 },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
