//! Property A, the exponential shift, and the verdicts of the counting theorems.

mod property_a;
mod shift;
mod verdict;

pub use property_a::{check_property_a, PropertyAVerdict, ZeroVerdict};
pub use shift::{compute_shift, compute_shift_for, psi_prime_polynomial, ShiftResult, TraceLevel};
pub use verdict::{
    hawaii_verdict, type_bound, verify_theorem2, verify_type_theorem, BoundCheck, TheoremVerdicts, Verdict,
};
