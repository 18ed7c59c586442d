//! Verdicts of the counting theorems, reproducible from the counts and property A.

use std::fmt;

use super::property_a::PropertyAVerdict;
use super::shift::{compute_shift_for, ShiftResult};
use crate::error::Result;
use crate::lpstar::{Analysis, CountSummary, FnKind, LpStarFn};

/// Outcome of one check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Pass,
    Fail,
    NotApplicable,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn is_fail(self) -> bool {
        self == Verdict::Fail
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::NotApplicable => "not-applicable",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A two-sided bound `lower ≤ value ≤ upper` and its verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundCheck {
    pub lower: i64,
    pub value: i64,
    pub upper: i64,
    pub verdict: Verdict,
}

impl BoundCheck {
    fn new(lower: i64, value: i64, upper: i64, applicable: bool) -> Self {
        let verdict = if applicable {
            Verdict::from_bool(lower <= value && value <= upper)
        } else {
            Verdict::NotApplicable
        };
        BoundCheck {
            lower,
            value,
            upper,
            verdict,
        }
    }
}

/// `(lower-bound check, two-sided check)`: `2m − 2m₁ ≤ Z(Q)` always, and
/// `Z(Q) ≤ 2m − 2m₁ + Z(Q₁)` when property A holds.
pub fn verify_theorem2(s: &CountSummary, pa: &PropertyAVerdict) -> (Verdict, BoundCheck) {
    let lower = s.two_m as i64 - s.two_m1 as i64;
    let value = s.zr_q as i64;
    let prop1 = Verdict::from_bool(lower <= value);
    (prop1, BoundCheck::new(lower, value, lower + s.zr_q1 as i64, pa.overall))
}

/// Lower end of the type theorem's bound, by the shape of the function.
pub fn type_bound(kind: FnKind, s: &CountSummary) -> i64 {
    let e = 2 * (s.extra as i64 / 2);
    let has_real = s.real_zeros > 0;
    match (kind, has_real) {
        (FnKind::Polynomial, false) => e + 2,
        (FnKind::Gaussian, true) => e - 2,
        _ => e,
    }
}

/// The extra-zero bound `B ≤ Z(Q) ≤ B + Z(Q₁)` matching the function's type, under property A.
pub fn verify_type_theorem(kind: FnKind, s: &CountSummary, pa: &PropertyAVerdict) -> BoundCheck {
    let lower = type_bound(kind, s);
    BoundCheck::new(lower, s.zr_q as i64, lower + s.zr_q1 as i64, pa.overall)
}

/// All verdicts for one function.
#[derive(Clone, Debug)]
pub struct TheoremVerdicts {
    pub summary: CountSummary,
    pub kind: FnKind,
    /// `Z(Q) ≤ 2m`.
    pub hawaii: Verdict,
    /// `2m − 2m₁ ≤ Z(Q)`.
    pub prop1: Verdict,
    pub theorem2_applicable: bool,
    pub theorem2: BoundCheck,
    pub type_theorem: BoundCheck,
    pub property_a: PropertyAVerdict,
    /// The shift construction, run when `Z(Q) > 0`.
    pub shift: Option<ShiftResult>,
}

impl TheoremVerdicts {
    pub fn from_analysis(an: &Analysis) -> Result<Self> {
        let s = an.summary;
        let pa = PropertyAVerdict::from_analysis(an)?;
        let (prop1, theorem2) = verify_theorem2(&s, &pa);
        let kind = an.function.kind();
        let type_theorem = verify_type_theorem(kind, &s, &pa);
        let shift = if s.zr_q > 0 { Some(compute_shift_for(an)?) } else { None };
        Ok(TheoremVerdicts {
            summary: s,
            kind,
            hawaii: Verdict::from_bool(s.zr_q <= s.two_m),
            prop1,
            theorem2_applicable: pa.overall,
            theorem2,
            type_theorem,
            property_a: pa,
            shift,
        })
    }

    /// True when no check failed (not-applicable checks do not count).
    pub fn all_pass(&self) -> bool {
        ![
            self.hawaii,
            self.prop1,
            self.theorem2.verdict,
            self.type_theorem.verdict,
        ]
        .iter()
        .any(|v| v.is_fail())
    }
}

/// Counts, property A, all theorem verdicts and (when `Z(Q) > 0`) the shift.
pub fn hawaii_verdict(f: &LpStarFn) -> Result<TheoremVerdicts> {
    TheoremVerdicts::from_analysis(&f.analyze()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Poly;

    #[test]
    fn z2_plus_1_is_tight() {
        let v = hawaii_verdict(&LpStarFn::polynomial(Poly::from_i64(&[1, 0, 1])).unwrap()).unwrap();
        assert_eq!(v.hawaii, Verdict::Pass);
        assert_eq!(v.theorem2.verdict, Verdict::Pass);
        assert_eq!((v.type_theorem.lower, v.type_theorem.upper), (2, 2));
        assert!(v.all_pass());
    }

    #[test]
    fn real_rooted_cubic() {
        let v = hawaii_verdict(&LpStarFn::polynomial(Poly::from_i64(&[0, -1, 0, 1])).unwrap()).unwrap();
        assert_eq!(v.summary.zr_q, 0);
        assert_eq!(v.type_theorem.lower, 0);
        assert!(v.all_pass() && v.shift.is_none());
    }
}
