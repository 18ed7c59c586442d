//! Real algebraic numbers as (square-free polynomial, isolating interval).

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::sturm::SturmChain;
use crate::error::{Error, Result};
use crate::poly::intpoly::{self, IntPoly};
use crate::poly::{gcd, Interval, Poly};
use crate::rational::{self, Rational};

/// A real algebraic number.
///
/// Either rational (`lo == hi`, defining polynomial `z − lo`), or the unique
/// root of a square-free polynomial inside the open interval `(lo, hi)`, whose
/// endpoints are not roots.
#[derive(Clone)]
pub struct AlgebraicNumber {
    poly: Arc<Poly>,
    ipoly: Arc<IntPoly>,
    lo: Rational,
    hi: Rational,
    /// Sign of the defining polynomial at `lo` (0 for rationals).
    sign_lo: i8,
}

impl AlgebraicNumber {
    /// The rational number `r`.
    pub fn rational(r: Rational) -> Self {
        let poly = Poly::linear_root(&r);
        let ipoly = poly.primitive_int();
        AlgebraicNumber {
            poly: Arc::new(poly),
            ipoly: Arc::new(ipoly),
            lo: r.clone(),
            hi: r,
            sign_lo: 0,
        }
    }

    /// The unique root of square-free `poly` in `(lo, hi)`, verified by a Sturm count.
    ///
    /// `lo == hi` is accepted when `lo` is a root. Degree-one polynomials
    /// always produce the exact rational.
    pub fn new(poly: Poly, lo: Rational, hi: Rational) -> Result<Self> {
        if poly.is_constant() {
            return Err(Error::ZeroPolynomial);
        }
        if lo > hi {
            return Err(Error::MalformedRange);
        }
        if lo == hi {
            return if poly.eval(&lo).is_zero() {
                Ok(Self::rational(lo))
            } else {
                Err(Error::NotIsolating)
            };
        }
        let ipoly = poly.primitive_int();
        if intpoly::sign_at(&ipoly, &lo) == 0 || intpoly::sign_at(&ipoly, &hi) == 0 {
            return Err(Error::NotIsolating);
        }
        let chain = SturmChain::from_int(ipoly.clone());
        if chain.count_closed(&lo, &hi) != 1 {
            return Err(Error::NotIsolating);
        }
        Ok(Self::new_unchecked(poly, ipoly, lo, hi))
    }

    /// Builds without verification. The caller guarantees the invariants.
    pub(crate) fn new_unchecked(poly: Poly, ipoly: IntPoly, lo: Rational, hi: Rational) -> Self {
        if lo == hi {
            return Self::rational(lo);
        }
        if poly.degree() == Some(1) {
            let c = poly.coeffs();
            return Self::rational(-&c[0] / &c[1]);
        }
        let sign_lo = intpoly::sign_at(&ipoly, &lo);
        debug_assert!(sign_lo != 0 && intpoly::sign_at(&ipoly, &hi) == -sign_lo);
        AlgebraicNumber {
            poly: Arc::new(poly.monic()),
            ipoly: Arc::new(ipoly),
            lo,
            hi,
            sign_lo,
        }
    }

    /// The defining square-free polynomial (monic).
    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    /// Integer primitive form of the defining polynomial.
    pub fn int_poly(&self) -> &IntPoly {
        &self.ipoly
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn interval(&self) -> Interval {
        Interval {
            lo: self.lo.clone(),
            hi: self.hi.clone(),
        }
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    /// The exact value when the number is known to be rational.
    pub fn as_rational(&self) -> Option<&Rational> {
        (self.lo == self.hi).then_some(&self.lo)
    }

    /// Halves the isolating interval (or lands exactly on a rational root).
    pub fn refine_once(&mut self) {
        if self.lo == self.hi {
            return;
        }
        let mid = (&self.lo + &self.hi) / rational::int(2);
        let s = intpoly::sign_at(&self.ipoly, &mid);
        if s == 0 {
            *self = Self::rational(mid);
        } else if s == self.sign_lo {
            self.lo = mid;
        } else {
            self.hi = mid;
        }
    }

    /// Refines in place until the width is at most `width`.
    pub fn refine_to(&mut self, width: &Rational) {
        assert!(width.is_positive(), "refinement width must be positive");
        while &self.width() > width {
            self.refine_once();
        }
    }

    /// The same number with an interval of width at most `width`.
    pub fn refined(&self, width: &Rational) -> Self {
        let mut x = self.clone();
        x.refine_to(width);
        x
    }

    /// Detects a rational value exactly and switches to the rational form.
    ///
    /// A rational root of an integer polynomial has a denominator dividing the
    /// leading coefficient `L`; two such rationals are at least `1/L²` apart,
    /// so the simplest rational of a narrow enough interval is the only candidate.
    pub fn detect_rational(&mut self) -> bool {
        if self.lo == self.hi {
            return true;
        }
        let lc = self.ipoly.last().expect("nonconstant").abs();
        let width = Rational::new(BigInt::one(), &lc * &lc * BigInt::from(2));
        self.refine_to(&width);
        if self.lo == self.hi {
            return true;
        }
        let s = rational::simplest_in(&self.lo, &self.hi);
        if s.denom() <= &lc && intpoly::sign_at(&self.ipoly, &s) == 0 {
            *self = Self::rational(s);
            return true;
        }
        false
    }

    /// `−x`.
    pub fn neg(&self) -> Self {
        if let Some(r) = self.as_rational() {
            return Self::rational(-r);
        }
        let poly = self.poly.mirror();
        let ipoly = poly.primitive_int();
        Self::new_unchecked(poly, ipoly, -&self.hi, -&self.lo)
    }

    /// Approximate value for display and numeric cross-checks.
    pub fn to_f64(&self) -> f64 {
        let x = self.refined(&Rational::new(BigInt::one(), BigInt::one() << 60));
        (rational::to_f64(&x.lo) + rational::to_f64(&x.hi)) / 2.0
    }

    /// Decimal enclosure `[lo, hi]` with `digits` fractional digits, rounded outward.
    ///
    /// The enclosure is at most `2·10^−digits` wide.
    pub fn decimal_enclosure(&self, digits: u32) -> (String, String) {
        let w = Rational::new(BigInt::one(), num_traits::pow(BigInt::from(10), digits as usize) * 4);
        let x = self.refined(&w);
        (
            rational::to_decimal(&x.lo, digits, false),
            rational::to_decimal(&x.hi, digits, true),
        )
    }
}

impl fmt::Debug for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_rational() {
            Some(r) => write!(f, "{r}"),
            None => write!(f, "root of {} in ({}, {})", self.poly, self.lo, self.hi),
        }
    }
}

impl fmt::Display for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Exact sign of `f(x)`, refining `x` in place as needed.
pub fn sign_at_mut(f: &Poly, x: &mut AlgebraicNumber) -> i8 {
    if f.is_zero() {
        return 0;
    }
    if let Some(r) = x.as_rational() {
        return f.sign_at(r);
    }
    if let Some(s) = f.eval_interval(&x.interval()).sign() {
        return s;
    }
    // Zero test: x is a root of f iff the gcd changes sign across x's interval.
    let g = gcd(f, &x.poly).expect("x.poly is nonzero");
    if !g.is_constant() {
        let gi = g.primitive_int();
        if intpoly::sign_at(&gi, &x.lo) != intpoly::sign_at(&gi, &x.hi) {
            return 0;
        }
    }
    loop {
        x.refine_once();
        if let Some(r) = x.as_rational() {
            return f.sign_at(r);
        }
        if let Some(s) = f.eval_interval(&x.interval()).sign() {
            return s;
        }
    }
}

/// Exact sign of `f(x)`.
pub fn sign_at(f: &Poly, x: &AlgebraicNumber) -> i8 {
    sign_at_mut(f, &mut x.clone())
}

/// True when `r` is the number `x`.
fn equals_rational(x: &AlgebraicNumber, r: &Rational) -> bool {
    match x.as_rational() {
        Some(s) => s == r,
        None => &x.lo < r && r < &x.hi && intpoly::sign_at(&x.ipoly, r) == 0,
    }
}

/// Exact order of two algebraic numbers, refining both in place.
pub fn compare_mut(x: &mut AlgebraicNumber, y: &mut AlgebraicNumber) -> Ordering {
    // Checked once both intervals overlap: can the two numbers coincide at all?
    let mut may_be_equal: Option<Option<IntPoly>> = None;
    loop {
        match (x.as_rational(), y.as_rational()) {
            (Some(a), Some(b)) => return a.cmp(b),
            (Some(a), None) if equals_rational(y, a) => return Ordering::Equal,
            (None, Some(b)) if equals_rational(x, b) => return Ordering::Equal,
            _ => {}
        }
        if x.hi <= y.lo {
            return Ordering::Less;
        }
        if y.hi <= x.lo {
            return Ordering::Greater;
        }
        if x.as_rational().is_none() && y.as_rational().is_none() {
            let common = may_be_equal.get_or_insert_with(|| {
                let g = gcd(&x.poly, &y.poly).expect("nonzero");
                if g.is_constant() {
                    return None;
                }
                let gi = g.primitive_int();
                let root_of = |n: &AlgebraicNumber| intpoly::sign_at(&gi, &n.lo) != intpoly::sign_at(&gi, &n.hi);
                (root_of(x) && root_of(y)).then_some(gi)
            });
            if let Some(gi) = common {
                // Both are roots of g; equal iff g has a single root in the hull.
                let lo = (&x.lo).min(&y.lo).clone();
                let hi = (&x.hi).max(&y.hi).clone();
                if SturmChain::from_int(gi.clone()).count_closed(&lo, &hi) == 1 {
                    return Ordering::Equal;
                }
            }
        }
        if x.width() >= y.width() {
            x.refine_once();
        } else {
            y.refine_once();
        }
    }
}

/// Exact order of two algebraic numbers.
pub fn compare(x: &AlgebraicNumber, y: &AlgebraicNumber) -> Ordering {
    compare_mut(&mut x.clone(), &mut y.clone())
}

impl PartialEq for AlgebraicNumber {
    fn eq(&self, other: &Self) -> bool {
        compare(self, other) == Ordering::Equal
    }
}

impl Eq for AlgebraicNumber {}

impl PartialOrd for AlgebraicNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for AlgebraicNumber {
    fn cmp(&self, other: &Self) -> Ordering {
        compare(self, other)
    }
}
