use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("no input points")]
    EmptyInput,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("system {0} cannot be assembled on this fan")]
    UnsupportedSpec(String),

    #[error("differentials do not compose to zero starting at degree {degree}")]
    NotAComplex { degree: usize },

    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),

    #[error("skeleton dimension {ell} out of range 2..={max}")]
    DimensionOutOfRange { ell: usize, max: usize },

    #[error("vertex {0} has non-integral coordinates")]
    NonIntegralVertices(usize),

    #[error("degree takes value {value} >= 2 on generator {generator}")]
    DegreeNotBounded { generator: usize, value: i64 },

    #[error("degree unsupported: {0}")]
    DegreeUnsupported(String),

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("unknown zoo polytope `{0}`")]
    UnknownName(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
