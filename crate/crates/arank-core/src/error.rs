//! Error type shared by every module in the crate.

use alloc::string::String;
use core::fmt;

/// Everything that can go wrong short of a programming error.
///
/// Dimension checks guard exact algorithms against silently misaligned
/// inputs; the precondition variants surface mathematical preconditions
/// (a cone that is not strongly convex, a pair of gradings that is not a
/// specialization pair); `BudgetExceeded` marks enumerations that were
/// refused because they would not finish in reasonable time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two objects that must share a dimension do not.
    DimensionMismatch { expected: usize, got: usize },
    /// An index referred past the end of a matrix, configuration or complex.
    IndexOutOfRange { index: usize, len: usize },
    /// The zero polynomial was supplied where a nonzero one is required.
    ZeroPolynomial,
    /// A polynomial exponent vector had a negative entry.
    NegativeExponent,
    /// The cone at hand is not strongly convex but the operation needs it.
    NotStronglyConvex,
    /// The pair of gradings is not a specialization pair.
    NotASpecialization,
    /// The grading is not positive.
    NotPositive,
    /// A graph operation that requires bipartiteness met an odd cycle.
    NotBipartite,
    /// Graph construction met a loop, a duplicate edge or a bad endpoint.
    InvalidGraph(String),
    /// An enumeration was refused because its size exceeds the budget.
    BudgetExceeded { budget: usize, required: usize },
    /// The claimed subcomplex is not a subcomplex of the ambient complex.
    NotASubcomplex,
    /// A vector that must lie in the span of a configuration does not.
    NotInSpan,
    /// An operation received an empty input it cannot give a meaning to.
    EmptyInput(&'static str),
}

impl core::error::Error for Error {}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            Error::IndexOutOfRange { index, len } => {
                write!(f, "index {index} out of range for length {len}")
            }
            Error::ZeroPolynomial => write!(f, "the zero polynomial is not allowed here"),
            Error::NegativeExponent => write!(f, "polynomial exponents must be nonnegative"),
            Error::NotStronglyConvex => write!(f, "cone is not strongly convex"),
            Error::NotASpecialization => {
                write!(f, "the gradings do not form a specialization pair")
            }
            Error::NotPositive => write!(f, "the grading is not positive"),
            Error::NotBipartite => write!(f, "graph is not bipartite"),
            Error::InvalidGraph(msg) => write!(f, "invalid graph: {msg}"),
            Error::BudgetExceeded { budget, required } => {
                write!(f, "enumeration budget exceeded: budget {budget}, required {required}")
            }
            Error::NotASubcomplex => write!(f, "not a subcomplex of the ambient complex"),
            Error::NotInSpan => write!(f, "vector lies outside the span of the configuration"),
            Error::EmptyInput(what) => write!(f, "empty input: {what}"),
        }
    }
}
