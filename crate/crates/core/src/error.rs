use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Every failure surfaced by the library. Each variant maps to a stable
/// machine-readable code via [`Error::code`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("insufficient precision: {what} needs precision {required}, have {available}")]
    InsufficientPrecision {
        what: &'static str,
        required: usize,
        available: usize,
    },

    #[error("precision exhausted")]
    PrecisionExhausted,

    #[error("invalid series argument: {0}")]
    InvalidSeries(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("arc is not smooth: a0 and a1 are linearly dependent")]
    NotSmooth,

    #[error("arc is inflexional at the origin (wronskian vanishes)")]
    Inflexional,

    #[error("arc is inflexional beyond available precision {precision}")]
    InflexionalBeyondPrecision { precision: usize },

    #[error("rank deficiency: {0}")]
    RankDeficient(String),

    #[error("singular matrix")]
    Singular,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("{op} is not available in dimension n = {n}")]
    UnsupportedDimension { op: &'static str, n: usize },

    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },

    #[error("expression is not bihomogeneous: {0}")]
    NotBihomogeneous(String),

    #[error("arc lies on the Monge hypersurface; the mu3 slice is undefined")]
    MongeMember,

    #[error("canonical form is not exact (alpha has no rational cube root)")]
    InexactForm,

    #[error("inconsistent fit: {0}")]
    InconsistentFit(String),

    #[error("malformed input: {0}")]
    Input(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::InsufficientPrecision { .. } => "INSUFFICIENT_PRECISION",
            Error::PrecisionExhausted => "PRECISION_EXHAUSTED",
            Error::InvalidSeries(_) => "INVALID_SERIES",
            Error::InvalidArgument(_) => "INVALID_ARGUMENT",
            Error::NotSmooth => "NOT_SMOOTH",
            Error::Inflexional => "INFLEXIONAL",
            Error::InflexionalBeyondPrecision { .. } => "INFLEXIONAL_BEYOND_PRECISION",
            Error::RankDeficient(_) => "RANK_DEFICIENT",
            Error::Singular => "SINGULAR",
            Error::DimensionMismatch { .. } => "DIMENSION_MISMATCH",
            Error::UnsupportedDimension { .. } => "UNSUPPORTED_DIMENSION",
            Error::Parse { .. } => "PARSE_ERROR",
            Error::NotBihomogeneous(_) => "NOT_BIHOMOGENEOUS",
            Error::MongeMember => "MONGE_MEMBER",
            Error::InexactForm => "INEXACT_FORM",
            Error::InconsistentFit(_) => "INCONSISTENT_FIT",
            Error::Input(_) => "INVALID_INPUT",
            Error::Internal(_) => "INTERNAL",
        }
    }

    pub(crate) fn precision(what: &'static str, required: usize, available: usize) -> Self {
        Error::InsufficientPrecision {
            what,
            required,
            available,
        }
    }
}
