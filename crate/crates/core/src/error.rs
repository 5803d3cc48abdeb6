use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("objects live in different polynomial rings")]
    RingMismatch,
    #[error("operation needs a nonzero polynomial")]
    EmptyPolynomial,
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("parse error at {line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("generator {index} is not homogeneous: {poly}")]
    NotHomogeneous { index: usize, poly: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("unsupported field: {0}")]
    UnsupportedField(String),
    #[error("linear change is singular")]
    SingularChange,
    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),
    #[error("monomial ideal is not Borel-fixed")]
    NotBorelFixed,
    #[error("generic initial ideal did not stabilize after {rounds} rounds")]
    GinInstability { rounds: usize },
    #[error("partial elimination recipes disagree at level {level}; coordinates are not generic")]
    RecipeMismatch { level: u32 },
    #[error("ideal does not define a curve (Hilbert polynomial of degree {hilbert_degree})")]
    NotACurve { hilbert_degree: i64 },
    #[error("point is not on the scheme")]
    PointNotOnScheme,
    #[error("projection center lies on the variety")]
    CenterOnVariety,
    #[error("secant point lands on the curve")]
    LandedOnCurve,
    #[error("zero polynomial not allowed here")]
    ZeroDivisor,
    #[error("invalid argument: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
