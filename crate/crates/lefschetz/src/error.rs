//! Error type shared across the crate.
//!
//! Every message starts with a stable camel-case code so that callers (and the
//! command-line tool's one-line diagnostics) can match on the failure kind
//! without parsing prose.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong when validating or combining degree data.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A sequence with no positive entry cannot be a Hilbert function.
    #[error("EmptyFunction: the sequence has no positive entry")]
    EmptyFunction,

    /// A Hilbert function of a standard graded algebra has `H(0) = 1`.
    #[error("NonUnitStart: a Hilbert function must start with 1, found {0}")]
    NonUnitStart(i64),

    /// Negative value where a nonnegative one is required.
    #[error("NegativeEntry: value {value} at degree {degree} must be nonnegative")]
    NegativeEntry { degree: usize, value: i64 },

    /// Macaulay growth bounds are defined for positions `i >= 1`.
    #[error("InvalidIndex: Macaulay bound position must be at least 1, got {0}")]
    InvalidIndex(i64),

    /// Gorenstein degree sequences in codimension 3 have odd length `2m + 1`.
    #[error("EvenLength: a Gorenstein degree sequence has odd length, got {0} entries")]
    EvenLength(usize),

    /// Fewer than three degrees cannot present an Artinian codimension-3 ideal.
    #[error("TooShort: a Gorenstein degree sequence has at least 3 entries, got {0}")]
    TooShort(usize),

    /// Degree lists are kept sorted; position is 1-based.
    #[error("NotSorted: degrees must be nondecreasing, violated at position {0}")]
    NotSorted(usize),

    /// Generator degrees are positive; position is 1-based.
    #[error("NonPositive: degrees must be positive, violated at position {0}")]
    NonPositive(usize),

    /// The socle degree `theta = (sum of degrees) / m` must be an integer.
    #[error("NonIntegerTheta: degree total {sum} is not divisible by m = {m}")]
    NonIntegerTheta { sum: i64, m: usize },

    /// Second Gaeta condition `theta > d_i + d_(2m+3-i)` fails at index `i`.
    #[error("PairBound: theta must exceed d_{i} + d_{{2m+3-{i}}}, violated at i = {i}")]
    PairBound { i: usize },

    /// Ghost-pair removal refuses to shrink a sequence below three entries.
    #[error("WouldEmptySequence: removing a ghost pair would leave fewer than 3 degrees")]
    WouldEmptySequence,

    /// No complete intersection of the requested degrees sits inside the
    /// Gorenstein ideal: the triple must dominate `mci` componentwise.
    #[error("RegorEmpty: {alpha:?} does not dominate the minimal triple {mci:?}")]
    RegorEmpty { alpha: [i64; 3], mci: [i64; 3] },

    /// Linking an ideal to itself produces the empty residual.
    #[error("TrivialLink: the complete intersection and the Gorenstein ideal have equal theta")]
    TrivialLink,

    /// Internal consistency failure: a residual Hilbert value went negative.
    #[error("NegativeValue: internal consistency failure at degree {0}")]
    NegativeValue(i64),

    /// A monomial quotient is Artinian only if some pure power of each
    /// variable lies in the ideal; the variable index is 1-based.
    #[error("NotArtinian: no pure-power generator in variable {0}")]
    NotArtinian(usize),

    /// Monomial generators are a set, not a multiset.
    #[error("DuplicateGenerator: {0:?} appears more than once")]
    DuplicateGenerator([i64; 3]),

    /// The zero exponent vector is the unit monomial and generates everything.
    #[error("ZeroGenerator: the zero exponent vector is not a proper generator")]
    ZeroGenerator,

    /// Exponent vectors live in `N^3`.
    #[error("NegativeExponent: {0:?} has a negative entry")]
    NegativeExponent([i64; 3]),
}
