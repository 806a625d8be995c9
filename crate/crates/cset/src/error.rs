use crate::set::IntSet;

/// Every failure the library can report.
///
/// The crate never panics on bad input and never wraps silently: anything
/// outside an operation's domain comes back as one of these variants.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[non_exhaustive]
pub enum Error {
    /// A set needs at least one element.
    #[error("input contains no elements; a set needs at least one")]
    EmptyInput,

    /// The input listed the same value twice; elements must be distinct.
    #[error("value {0} appears more than once; elements must be distinct")]
    DuplicateElement(i64),

    /// An intermediate value left the 64-bit range. The payload names the
    /// computation that overflowed.
    #[error("arithmetic overflow: {0}")]
    Overflow(&'static str),

    /// The operation needs at least two elements.
    #[error("operation needs at least two elements")]
    DegenerateSet,

    /// Scaling by zero collapses every element to 0.
    #[error("scalar must be nonzero")]
    ZeroScalar,

    /// The operation's hypothesis requires a complete set.
    #[error("set {0} is not complete")]
    NotComplete(IntSet),

    /// The operation requires disjoint sets; the payload is a shared element.
    #[error("sets share the element {0}; they must be disjoint")]
    NotDisjoint(i64),

    /// The operation requires a zero-sum set; the payload is the actual sum.
    #[error("set must sum to zero, but sums to {0}")]
    NonZeroSum(i64),

    /// The construction divides by a set sum, which is zero here.
    #[error("set sum is zero; the construction divides by the sum")]
    ZeroSum,

    /// Subset enumeration is capped; the payload is the rejected N.
    #[error("N = {0} exceeds the subset-enumeration cap of 30")]
    NTooLarge(u32),

    /// The operation is undefined at zero.
    #[error("input must be nonzero")]
    ZeroInput,

    /// The operation accepts positive integers only.
    #[error("element {0} is not a positive integer")]
    NonPositiveElement(i64),
}

impl Error {
    /// Stable machine-readable name of the variant, used in CLI error bodies.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::EmptyInput => "EmptyInput",
            Error::DuplicateElement(_) => "DuplicateElement",
            Error::Overflow(_) => "Overflow",
            Error::DegenerateSet => "DegenerateSet",
            Error::ZeroScalar => "ZeroScalar",
            Error::NotComplete(_) => "NotComplete",
            Error::NotDisjoint(_) => "NotDisjoint",
            Error::NonZeroSum(_) => "NonZeroSum",
            Error::ZeroSum => "ZeroSum",
            Error::NTooLarge(_) => "NTooLarge",
            Error::ZeroInput => "ZeroInput",
            Error::NonPositiveElement(_) => "NonPositiveElement",
        }
    }
}
