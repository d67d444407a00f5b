use thiserror::Error;

/// Errors surfaced by the exact-arithmetic pipeline.
///
/// Anything that indicates a caller mistake (bad argument ranges, malformed
/// strata) is reported here rather than panicking, so the CLI can map it to a
/// usage error. Integrality failures are also errors: several operations
/// promise integer output on mathematical grounds, and a non-integral result
/// means either a transcription bug or an invalid input, never something to
/// round away.
#[derive(Debug, Error)]
pub enum Error {
    /// Plethysm `f ∘ g` requires `g` to have no degree-zero term.
    #[error("plethysm substituent has a nonzero constant term ({0})")]
    NonzeroConstantTerm(String),

    /// Series inversion is only defined when the constant term is a unit of Z.
    #[error("series constant term {0} is not \u{b1}1, cannot invert")]
    NotAUnit(String),

    /// A polynomial division that must be exact left a remainder.
    #[error("inexact division: {context} left remainder {remainder}")]
    InexactDivision { context: String, remainder: String },

    /// A value that is integral on mathematical grounds came out fractional.
    #[error("non-integral value in {context}: {value}")]
    NonIntegral { context: String, value: String },

    /// A group element was expected to generate the full level but does not.
    #[error("decoration has order {found}, expected order {expected}")]
    OrderMismatch { found: u64, expected: u64 },

    /// An argument is outside the range an operation supports.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
