//! Error type shared by every module in the crate.

use thiserror::Error;

/// Domain errors. All arithmetic is exact, so these are the only failure
/// modes; there is no overflow and no loss of precision anywhere.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("coefficient sequence is empty")]
    EmptyCoefficients,

    #[error("coefficient at index {0} is negative")]
    NegativeCoefficient(usize),

    #[error("leading coefficient is zero (the zero polynomial is not representable)")]
    ZeroLeadingCoefficient,

    #[error("shift parameter must be positive, got {0}")]
    NonPositiveShift(String),

    #[error("index {index} out of range {lo}..={hi}")]
    IndexOutOfRange { index: usize, lo: usize, hi: usize },

    #[error("cannot parse {0:?} as an exact rational (expected \"p\" or \"p/q\")")]
    RationalParse(String),

    #[error("decimal notation is rejected, use an exact fraction: {0:?}")]
    DecimalRejected(String),

    #[error("denominator must be nonzero in {0:?}")]
    ZeroDenominator(String),

    #[error("inconsistent polynomial shape flags: {0}")]
    InconsistentShape(String),

    #[error("d grid must be nonempty, strictly increasing and positive")]
    BadGrid,

    #[error("sequence must be non-decreasing for this operation (first violation at index {0})")]
    NotNonDecreasing(usize),

    #[error("unknown claim id {0:?}")]
    UnknownClaim(String),

    #[error("unknown generator profile {0:?}")]
    UnknownProfile(String),

    #[error("malformed instance: {0}")]
    MalformedInstance(String),
}

pub type Result<T> = std::result::Result<T, Error>;
