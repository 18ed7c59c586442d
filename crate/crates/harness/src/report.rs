//! The JSON analysis report: exact integers for counts, exact strings for rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use hawaii_core::hawaii::{ShiftResult, TheoremVerdicts, ZeroVerdict};
use hawaii_core::rational::to_ratio_string;
use hawaii_core::{AlgebraicNumber, CountSummary, LpStarFn, Poly, Rational};

/// `"n/d"`, the serialized form of every rational coefficient.
pub fn ratio(r: &Rational) -> String {
    to_ratio_string(r)
}

/// Exact decimal form of a rational whose denominator divides a power of 10, else `"n/d"`.
pub fn exact_decimal(r: &Rational) -> String {
    let mut d = r.denom().clone();
    let (two, five) = (BigInt::from(2), BigInt::from(5));
    let (mut twos, mut fives) = (0usize, 0usize);
    while d.is_even() {
        d /= &two;
        twos += 1;
    }
    while (&d % &five).is_zero() {
        d /= &five;
        fives += 1;
    }
    if !d.is_one() {
        return ratio(r);
    }
    let digits = twos.max(fives);
    if digits == 0 {
        return r.numer().to_string();
    }
    let scaled = (r * Rational::from_integer(num_traits::pow(BigInt::from(10), digits))).to_integer();
    let neg = scaled < BigInt::zero();
    let s = if neg { -scaled } else { scaled }.to_string();
    let s = format!("{s:0>width$}", width = digits + 1);
    let (int_part, frac) = s.split_at(s.len() - digits);
    format!("{}{int_part}.{frac}", if neg { "-" } else { "" })
}

fn coeffs(p: &Poly) -> Vec<String> {
    p.coeffs().iter().map(ratio).collect()
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct FunctionJson {
    /// Coefficients of `p`, constant term first.
    pub p_coeffs: Vec<String>,
    pub a: String,
    pub b: String,
}

impl From<&LpStarFn> for FunctionJson {
    fn from(f: &LpStarFn) -> Self {
        FunctionJson {
            p_coeffs: coeffs(f.p()),
            a: ratio(f.a()),
            b: ratio(f.b()),
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CountsJson {
    pub two_m: usize,
    pub two_m1: usize,
    pub zr_q: usize,
    pub zr_q1: usize,
    pub extra: usize,
}

impl From<CountSummary> for CountsJson {
    fn from(s: CountSummary) -> Self {
        CountsJson {
            two_m: s.two_m,
            two_m1: s.two_m1,
            zr_q: s.zr_q,
            zr_q1: s.zr_q1,
            extra: s.extra,
        }
    }
}

/// A real algebraic number: defining polynomial, isolating interval and a decimal enclosure.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct AlgebraicJson {
    pub minpoly_coeffs: Vec<String>,
    pub interval: [String; 2],
    pub decimal: [String; 2],
}

impl AlgebraicJson {
    pub fn new(x: &AlgebraicNumber, digits: u32) -> Self {
        let (lo, hi) = x.decimal_enclosure(digits);
        AlgebraicJson {
            minpoly_coeffs: coeffs(x.poly()),
            interval: [exact_decimal(x.lo()), exact_decimal(x.hi())],
            decimal: [lo, hi],
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ZeroJson {
    pub alpha_interval: [String; 2],
    pub alpha: AlgebraicJson,
    pub multiplicity: usize,
    pub left_clear: bool,
    pub right_clear: bool,
    pub holds: bool,
}

impl ZeroJson {
    fn new(z: &ZeroVerdict, digits: u32) -> Self {
        let alpha = AlgebraicJson::new(&z.alpha, digits);
        ZeroJson {
            alpha_interval: alpha.interval.clone(),
            alpha,
            multiplicity: z.multiplicity,
            left_clear: z.left_clear,
            right_clear: z.right_clear,
            holds: z.holds,
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct PropertyAJson {
    pub overall: bool,
    /// Verdict when the outermost zeros look all the way to infinity.
    pub literal_overall: bool,
    pub per_zero: Vec<ZeroJson>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct VerdictsJson {
    pub hawaii: String,
    pub prop1: String,
    pub theorem2: String,
    pub type_theorem: String,
    /// `[lower, upper]` of the two-sided bound on `Z(Q)`.
    pub theorem2_bounds: [i64; 2],
    pub type_theorem_bounds: [i64; 2],
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ShiftJson {
    pub sigma_minpoly: Vec<String>,
    pub sigma_interval: [String; 2],
    pub sigma_decimal: [String; 2],
    /// `σ*` exactly, when it is rational.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sigma_exact: Option<String>,
    pub zc_before: usize,
    pub zc_after: usize,
    pub property_a_after: bool,
    pub signs_ok: bool,
    /// Polynomial part of `ψ*'`, when `σ*` is rational.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub psi_prime_part: Option<Vec<String>>,
}

impl ShiftJson {
    pub fn new(r: &ShiftResult, digits: u32) -> Self {
        let sigma = AlgebraicJson::new(&r.sigma_star, digits);
        ShiftJson {
            sigma_minpoly: sigma.minpoly_coeffs,
            sigma_interval: sigma.interval,
            sigma_decimal: sigma.decimal,
            sigma_exact: r.sigma_star.as_rational().map(ratio),
            zc_before: r.zc_phi,
            zc_after: r.zc_psi_prime,
            property_a_after: r.property_a_after,
            signs_ok: r.signs_ok,
            psi_prime_part: r.psi_prime_part.as_ref().map(coeffs),
        }
    }
}

/// Wall-clock timings; excluded from the determinism contract and always last.
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct TimingsJson {
    pub analyze: f64,
    pub verdicts: f64,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct AnalysisReport {
    pub function: FunctionJson,
    pub counts: CountsJson,
    pub property_a: PropertyAJson,
    pub verdicts: VerdictsJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub shift: Option<ShiftJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<TimingsJson>,
}

impl AnalysisReport {
    pub fn new(f: &LpStarFn, v: &TheoremVerdicts, digits: u32) -> Self {
        AnalysisReport {
            function: f.into(),
            counts: v.summary.into(),
            property_a: PropertyAJson {
                overall: v.property_a.overall,
                literal_overall: v.property_a.literal_overall,
                per_zero: v.property_a.per_zero.iter().map(|z| ZeroJson::new(z, digits)).collect(),
            },
            verdicts: VerdictsJson {
                hawaii: v.hawaii.as_str().into(),
                prop1: v.prop1.as_str().into(),
                theorem2: v.theorem2.verdict.as_str().into(),
                type_theorem: v.type_theorem.verdict.as_str().into(),
                theorem2_bounds: [v.theorem2.lower, v.theorem2.upper],
                type_theorem_bounds: [v.type_theorem.lower, v.type_theorem.upper],
            },
            shift: v.shift.as_ref().map(|r| ShiftJson::new(r, digits)),
            timings_ms: None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use hawaii_core::hawaii::hawaii_verdict;
    use hawaii_core::rational::rat;

    #[test]
    fn decimals() {
        assert_eq!(exact_decimal(&rat(1, 4)), "0.25");
        assert_eq!(exact_decimal(&rat(-3, 8)), "-0.375");
        assert_eq!(exact_decimal(&rat(7, 1)), "7");
        assert_eq!(exact_decimal(&rat(-1, 20)), "-0.05");
        assert_eq!(exact_decimal(&rat(1, 3)), "1/3");
    }

    #[test]
    fn field_order_is_stable() {
        let f = LpStarFn::polynomial(Poly::from_i64(&[1, 0, 1])).unwrap();
        let r = AnalysisReport::new(&f, &hawaii_verdict(&f).unwrap(), 10);
        let s = serde_json::to_string(&r).unwrap();
        let keys = [
            "\"function\"",
            "\"counts\"",
            "\"property_a\"",
            "\"verdicts\"",
            "\"shift\"",
        ];
        let pos: Vec<usize> = keys.iter().map(|k| s.find(k).unwrap()).collect();
        assert!(pos.windows(2).all(|w| w[0] < w[1]));
        assert!(s.contains("\"sigma_exact\":\"1/1\""));
        assert!(!s.contains("timings_ms"));
    }
}
