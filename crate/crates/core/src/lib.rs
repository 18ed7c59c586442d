//! Exact analysis of real entire functions of the form `φ(z) = p(z)·exp(-a z² + b z)`
//! with a real polynomial `p` and `a ≥ 0`.
//!
//! The crate computes the critical rational functions `Q = (φ'/φ)'` and
//! `Q₁ = (φ''/φ')'`, counts their real zeros exactly, decides property A,
//! constructs the exponential shift `ψ* = exp(-σ* z)·φ`, and checks the
//! inequalities that relate these counts to the nonreal zeros of `φ` and `φ'`.
//!
//! Everything is exact: rationals are arbitrary precision, real algebraic
//! numbers are carried as (square-free polynomial, isolating interval) pairs,
//! and every sign decision is certified.
//!
//! Layers, bottom up:
//! - [`poly`]: rational polynomials, gcd, square-free decomposition, resultants.
//! - [`realroots`]: Sturm chains, isolation, algebraic numbers, counting over `ℚ(σ)`.
//! - [`lpstar`]: the function model and its count summary.
//! - [`hawaii`]: property A, the exponential shift, and theorem verdicts.
//! - [`expr`]: the textual input grammar.

pub mod error;
pub mod expr;
pub mod hawaii;
pub mod lpstar;
pub mod poly;
pub mod rational;
pub mod realroots;

pub use error::{Error, Result};
pub use expr::{parse, parse_poly, FunctionExpr};
pub use hawaii::{
    check_property_a, compute_shift, hawaii_verdict, verify_theorem2, verify_type_theorem, PropertyAVerdict,
    ShiftResult, TheoremVerdicts, Verdict,
};
pub use lpstar::{Analysis, CountSummary, CriticalPair, DerivTower, FnKind, LpStarFn};
pub use poly::Poly;
pub use rational::Rational;
pub use realroots::{AlgebraicNumber, Bound, RootList};
