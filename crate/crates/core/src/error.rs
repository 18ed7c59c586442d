//! Error type shared by every layer of the crate.

use thiserror::Error;

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong in an exact computation or while reading input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An operation that needs a nonzero polynomial received the zero polynomial.
    #[error("zero polynomial is not allowed here")]
    ZeroPolynomial,
    /// gcd of two zero polynomials is undefined.
    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,
    /// Exact division left a nonzero remainder.
    #[error("polynomial division is not exact")]
    InexactDivision,
    /// A resultant vanished identically, so it carries no information.
    #[error("degenerate elimination: resultant is identically zero")]
    DegenerateElimination,
    /// A range whose lower end is not strictly below its upper end.
    #[error("malformed range: lower end must be strictly below upper end")]
    MalformedRange,
    /// The interval does not isolate exactly one root of the polynomial.
    #[error("interval does not isolate exactly one root")]
    NotIsolating,
    /// The function is `C·exp(bz)`, for which `Q` vanishes identically.
    #[error("excluded form C·exp(bz): the polynomial factor is constant and there is no Gaussian term")]
    ExcludedForm,
    /// The Gaussian coefficient must satisfy `a ≥ 0`.
    #[error("Gaussian coefficient must be nonnegative (exp(-a z^2 + b z) with a >= 0)")]
    NegativeGaussian,
    /// A parameter is outside its documented domain.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    /// Input text does not follow the grammar.
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    /// A generator profile asks for a root multiset that cannot be built.
    #[error("infeasible generator profile: {0}")]
    InfeasibleProfile(String),
    /// A result that the theory guarantees did not hold; always a bug.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
