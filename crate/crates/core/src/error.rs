use thiserror::Error;

/// Everything that can go wrong in the library.
///
/// Variants are grouped by the process exit code the CLI maps them to:
/// usage/parse problems (1), mathematical precondition failures (2) and
/// resource caps (3).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomials live in different rings ({left} vs {right})")]
    RingMismatch { left: String, right: String },

    #[error("variable index {index} out of range for a ring with {nvars} variables")]
    IndexOutOfRange { index: usize, nvars: usize },

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("polynomial is not homogeneous")]
    NotHomogeneous,

    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("wrong monomial order: {0}")]
    WrongOrder(String),

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("point {0} is not on the hypersurface")]
    NotOnHypersurface(String),

    #[error("point {0} does not lie on the zero set of the ideal")]
    PointNotInVariety(String),

    #[error("singular locus is not isolated (dimension {dimension})")]
    NonIsolated { dimension: i64 },

    #[error("point {0} is not an isolated point of the zero set")]
    NotIsolatedPoint(String),

    #[error("input is not reduced: repeated factor {witness}")]
    NotReduced { witness: String },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("linear-type criteria disagree: {0}")]
    CriteriaDisagreement(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// Process exit code used by the command line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } | Error::UnknownVariable(_) | Error::InvalidRing(_) | Error::Io(_) => 1,
            Error::ResourceLimit(_) => 3,
            _ => 2,
        }
    }

    /// Short machine-readable tag for reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::RingMismatch { .. } => "ring-mismatch",
            Error::IndexOutOfRange { .. } => "index-out-of-range",
            Error::InvalidRing(_) => "invalid-ring",
            Error::NotHomogeneous => "not-homogeneous",
            Error::ZeroPolynomial => "zero-polynomial",
            Error::DimensionMismatch { .. } => "dimension-mismatch",
            Error::WrongOrder(_) => "wrong-order",
            Error::ResourceLimit(_) => "resource-limit",
            Error::Parse { .. } => "parse",
            Error::UnknownVariable(_) => "unknown-variable",
            Error::NotOnHypersurface(_) => "not-on-hypersurface",
            Error::PointNotInVariety(_) => "point-not-in-variety",
            Error::NonIsolated { .. } => "non-isolated",
            Error::NotIsolatedPoint(_) => "not-isolated-point",
            Error::NotReduced { .. } => "not-reduced",
            Error::Precondition(_) => "precondition",
            Error::CriteriaDisagreement(_) => "criteria-disagreement",
            Error::Io(_) => "io",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
