use thiserror::Error;

/// Errors produced by the semigroup computations.
///
/// Every variant carries a stable machine-readable [`Error::code`] so the CLI
/// and the JSON envelopes can report it without string matching.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator list is invalid: {0}")]
    InvalidGenerators(String),

    #[error("gcd({a}, {d}) = {gcd}, the seed must be coprime")]
    NotCoprime { a: u64, d: u64, gcd: u64 },

    #[error("invalid seed: {0}")]
    InvalidSeed(String),

    #[error("Apéry base {base} is not an element of the semigroup")]
    AperyBaseNotInSemigroup { base: u64 },

    #[error("{value} is not an element of the semigroup")]
    NotMember { value: u64 },

    #[error("residue index {n} is outside 1..={max}")]
    ResidueOutOfRange { n: u64, max: u64 },

    #[error("a = {a} is below the minimality threshold a >= 11")]
    BelowMinimalityThreshold { a: u64 },

    #[error("embedding dimension {m} is not supported here (requires m = {required})")]
    UnsupportedDimension { m: usize, required: usize },

    #[error("(a, d) = ({a}, {d}) lies on a case boundary of the small-a Frobenius table")]
    CaseBoundary { a: u64, d: u64 },

    #[error("catalog generator {label} is invalid for (a, d) = ({a}, {d}): {reason}")]
    CatalogInvalidForSeed {
        label: String,
        a: u64,
        d: u64,
        reason: String,
    },

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("tangent cone is not free over the fibre cone ({0})")]
    UnsupportedNonFreeCone(String),

    #[error("order histogram mismatch: direct {direct:?}, closed form {closed_form:?}")]
    TCountMismatch {
        direct: Vec<u64>,
        closed_form: Vec<u64>,
    },

    #[error("checkpoint error: {0}")]
    Checkpoint(String),
}

impl Error {
    /// Stable identifier used in machine-readable output.
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidGenerators(_) => "invalidGenerators",
            Error::NotCoprime { .. } => "notCoprime",
            Error::InvalidSeed(_) => "invalidSeed",
            Error::AperyBaseNotInSemigroup { .. } => "aperyBaseNotInSemigroup",
            Error::NotMember { .. } => "notMember",
            Error::ResidueOutOfRange { .. } => "residueOutOfRange",
            Error::BelowMinimalityThreshold { .. } => "belowMinimalityThreshold",
            Error::UnsupportedDimension { .. } => "unsupportedDimension",
            Error::CaseBoundary { .. } => "caseBoundary",
            Error::CatalogInvalidForSeed { .. } => "catalogInvalidForSeed",
            Error::Overflow(_) => "overflow",
            Error::UnsupportedNonFreeCone(_) => "unsupportedNonFreeCone",
            Error::TCountMismatch { .. } => "tCountMismatch",
            Error::Checkpoint(_) => "checkpoint",
        }
    }

    /// True for errors that mean a computed object failed a cross-check,
    /// as opposed to an input outside the supported domain.
    pub fn is_verification_failure(&self) -> bool {
        matches!(self, Error::TCountMismatch { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn checked_add(x: u64, y: u64, what: &'static str) -> Result<u64> {
    x.checked_add(y).ok_or(Error::Overflow(what))
}

pub(crate) fn checked_mul(x: u64, y: u64, what: &'static str) -> Result<u64> {
    x.checked_mul(y).ok_or(Error::Overflow(what))
}
