//! Helpers around [`BigRational`], the exact scalar type of the crate.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational number in lowest terms with positive denominator.
pub type Rational = BigRational;

/// Builds `n/d` from machine integers. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Builds the integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Sign as `-1`, `0` or `1`.
pub fn sign(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// Sign of a big integer as `-1`, `0` or `1`.
pub fn sign_int(r: &BigInt) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// Serializes as `"num/den"`, always with an explicit denominator.
pub fn to_ratio_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `"n"`, `"-n"` or `"n/d"` (optionally signed) into a rational.
pub fn parse_ratio(s: &str) -> Result<Rational> {
    let bad = || Error::InvalidArgument(format!("not a rational number: {s:?}"));
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

/// Approximate value, for diagnostics and numeric oracles only.
pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // Fall back to scaling when numerator or denominator overflow f64.
        let shift = r.numer().bits().max(r.denom().bits()).saturating_sub(900) as usize;
        let n = (r.numer() >> shift).to_f64().unwrap_or(f64::NAN);
        let d = (r.denom() >> shift).to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

/// The rational with the smallest denominator in the closed interval `[lo, hi]`.
pub fn simplest_in(lo: &Rational, hi: &Rational) -> Rational {
    debug_assert!(lo <= hi);
    if !lo.is_positive() && !hi.is_negative() {
        return Rational::zero();
    }
    if hi.is_negative() {
        return -simplest_in(&-hi, &-lo);
    }
    let c = lo.ceil();
    if &c <= hi {
        return c;
    }
    let f = lo.floor();
    let inner = simplest_in(&(hi - &f).recip(), &(lo - &f).recip());
    f + inner.recip()
}

/// `10^digits` as a big integer.
fn pow10(digits: u32) -> BigInt {
    num_traits::pow(BigInt::from(10), digits as usize)
}

/// Decimal rendering of `r` rounded toward `-∞` (`up = false`) or `+∞` (`up = true`).
pub fn to_decimal(r: &Rational, digits: u32, up: bool) -> String {
    let scale = pow10(digits);
    let scaled = r * Rational::from_integer(scale.clone());
    let n = if up { scaled.ceil() } else { scaled.floor() }.to_integer();
    let neg = n.is_negative();
    let (q, rem) = n.abs().div_rem(&scale);
    let mut s = String::new();
    if neg {
        s.push('-');
    }
    s.push_str(&q.to_string());
    if digits > 0 {
        let frac = rem.to_string();
        s.push('.');
        for _ in frac.len()..digits as usize {
            s.push('0');
        }
        s.push_str(&frac);
    }
    s
}

/// Widens `[lo, hi]` to dyadic endpoints, at most doubling its width.
///
/// Keeps interval arithmetic from accumulating huge numerators and denominators.
pub fn round_outward(lo: &Rational, hi: &Rational) -> (Rational, Rational) {
    debug_assert!(lo <= hi);
    let w = hi - lo;
    if w.is_zero() {
        return (lo.clone(), hi.clone());
    }
    // Smallest k with 2^-k ≤ w/2.
    let mut k = w.denom().bits() as i64 - w.numer().bits() as i64 + 1;
    while pow2(-k) > &w / int(2) {
        k += 1;
    }
    let scale = pow2(k);
    let l = (lo * &scale).floor() / &scale;
    let h = (hi * &scale).ceil() / &scale;
    (l, h)
}

/// `|r|` as a rational.
pub fn abs(r: &Rational) -> Rational {
    r.abs()
}

/// `2^k` for a possibly negative exponent.
pub fn pow2(k: i64) -> Rational {
    let p = BigInt::one() << k.unsigned_abs();
    if k >= 0 {
        Rational::from_integer(p)
    } else {
        Rational::new(BigInt::one(), p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratio_round_trip() {
        for s in ["1/2", "-3/4", "5/1", "0/1"] {
            assert_eq!(to_ratio_string(&parse_ratio(s).unwrap()), s);
        }
        assert_eq!(parse_ratio("6/4").unwrap(), rat(3, 2));
        assert!(parse_ratio("1/0").is_err());
        assert!(parse_ratio("x").is_err());
    }

    #[test]
    fn simplest_rational() {
        assert_eq!(simplest_in(&rat(1, 3), &rat(1, 2)), rat(1, 2));
        assert_eq!(simplest_in(&rat(3, 10), &rat(4, 10)), rat(1, 3));
        assert_eq!(simplest_in(&rat(-4, 10), &rat(-3, 10)), rat(-1, 3));
        assert_eq!(simplest_in(&rat(-1, 10), &rat(3, 10)), int(0));
        assert_eq!(simplest_in(&rat(7, 5), &rat(7, 5)), rat(7, 5));
        assert_eq!(simplest_in(&rat(141, 100), &rat(142, 100)), rat(17, 12));
    }

    #[test]
    fn decimals() {
        assert_eq!(to_decimal(&rat(1, 3), 4, false), "0.3333");
        assert_eq!(to_decimal(&rat(1, 3), 4, true), "0.3334");
        assert_eq!(to_decimal(&rat(-1, 3), 2, false), "-0.34");
        assert_eq!(to_decimal(&rat(-1, 3), 2, true), "-0.33");
        assert_eq!(to_decimal(&int(2), 0, true), "2");
        assert_eq!(to_decimal(&rat(1, 100), 3, false), "0.010");
    }
}
