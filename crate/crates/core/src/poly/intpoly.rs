//! Dense integer polynomials (ascending coefficient vectors) used internally
//! for fraction-free remainder sequences, Sturm chains and root isolation.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::{sign_int, Rational};

/// Ascending integer coefficients, no trailing zeros; empty means zero.
pub type IntPoly = Vec<BigInt>;

pub fn trim(p: &mut IntPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

pub fn degree(p: &[BigInt]) -> Option<usize> {
    p.len().checked_sub(1)
}

/// Positive gcd of all coefficients (zero for the zero polynomial).
pub fn content(p: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in p {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Divides out the positive content, preserving the sign of every coefficient.
pub fn make_primitive(p: &mut IntPoly) {
    let g = content(p);
    if !g.is_zero() && !g.is_one() {
        for c in p.iter_mut() {
            *c = &*c / &g;
        }
    }
}

pub fn derivative(p: &[BigInt]) -> IntPoly {
    let mut d: IntPoly = p.iter().enumerate().skip(1).map(|(k, c)| c * BigInt::from(k)).collect();
    trim(&mut d);
    d
}

/// Pseudo-remainder: `lc(b)^(deg a − deg b + 1)·a mod b`.
pub fn prem(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    assert!(!b.is_empty(), "pseudo-division by zero polynomial");
    let mut r: IntPoly = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    if r.len() < b.len() {
        return r;
    }
    let lb = &b[db];
    let mut steps = r.len() - b.len() + 1;
    while r.len() >= b.len() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (k, bc) in b.iter().enumerate() {
            r[k + shift] -= &lr * bc;
        }
        debug_assert!(r[dr].is_zero());
        r.pop();
        trim(&mut r);
        steps -= 1;
    }
    // Complete the multiplier to exactly lc(b)^(δ+1) so the sign bookkeeping is uniform.
    if steps > 0 {
        let m = num_traits::pow(lb.clone(), steps);
        for c in r.iter_mut() {
            *c *= &m;
        }
    }
    r
}

/// `q^deg · p(n/q)` for `x = n/q` with `q > 0`: same sign as `p(x)`.
pub fn eval_homogeneous(p: &[BigInt], x: &Rational) -> BigInt {
    let Some(n) = degree(p) else {
        return BigInt::zero();
    };
    let (num, den) = (x.numer(), x.denom());
    let mut acc = p[n].clone();
    let mut qp = BigInt::one();
    for k in (0..n).rev() {
        qp *= den;
        acc = acc * num + &p[k] * &qp;
    }
    acc
}

pub fn sign_at(p: &[BigInt], x: &Rational) -> i8 {
    sign_int(&eval_homogeneous(p, x))
}

/// Sign at `+∞` (`pos = true`) or `−∞`.
pub fn sign_at_infinity(p: &[BigInt], pos: bool) -> i8 {
    match p.last() {
        None => 0,
        Some(lc) => {
            let s = sign_int(lc);
            if pos || (p.len() - 1).is_multiple_of(2) {
                s
            } else {
                -s
            }
        }
    }
}

/// Exact quotient `a / b` over the integers; `None` if not exact.
pub fn exact_div(a: &[BigInt], b: &[BigInt]) -> Option<IntPoly> {
    assert!(!b.is_empty(), "division by zero polynomial");
    let mut r: IntPoly = a.to_vec();
    trim(&mut r);
    if r.is_empty() {
        return Some(Vec::new());
    }
    if r.len() < b.len() {
        return None;
    }
    let db = b.len() - 1;
    let lb = &b[db];
    let mut q = vec![BigInt::zero(); r.len() - db];
    while r.len() >= b.len() {
        let dr = r.len() - 1;
        let (c, rem) = r[dr].div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        let shift = dr - db;
        for (k, bc) in b.iter().enumerate() {
            r[k + shift] -= &c * bc;
        }
        q[shift] = c;
        r.pop();
        trim(&mut r);
    }
    if r.is_empty() {
        Some(q)
    } else {
        None
    }
}

/// Primitive gcd via the primitive pseudo-remainder sequence; positive leading coefficient.
pub fn gcd(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    let mut a: IntPoly = a.to_vec();
    let mut b: IntPoly = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    make_primitive(&mut a);
    make_primitive(&mut b);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        if b.len() == 1 {
            return vec![BigInt::one()];
        }
        let mut r = prem(&a, &b);
        make_primitive(&mut r);
        a = b;
        b = r;
    }
    if a.last().is_some_and(|c| c.is_negative()) {
        for c in a.iter_mut() {
            *c = -&*c;
        }
    }
    a
}

/// Multiplies `p(x)` into `2^deg · p(x/2)`.
pub fn halve_argument(p: &[BigInt]) -> IntPoly {
    let n = p.len().saturating_sub(1);
    p.iter().enumerate().map(|(k, c)| c << (n - k)).collect()
}

/// `p(x + 1)` by repeated synthetic division (Taylor shift).
pub fn taylor_shift_one(p: &[BigInt]) -> IntPoly {
    let mut c: IntPoly = p.to_vec();
    let n = c.len();
    for i in 0..n {
        for k in (i..n.saturating_sub(1)).rev() {
            let t = c[k + 1].clone();
            c[k] += t;
        }
    }
    c
}

/// Number of sign changes in the coefficient sequence, zeros skipped.
pub fn sign_variations(p: &[BigInt]) -> usize {
    let mut last = 0i8;
    let mut v = 0;
    for c in p {
        let s = sign_int(c);
        if s != 0 {
            if last != 0 && s != last {
                v += 1;
            }
            last = s;
        }
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(c: &[i64]) -> IntPoly {
        c.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn taylor_shift_matches_expansion() {
        // (x+1)^2 - 2 = x^2 + 2x - 1
        assert_eq!(taylor_shift_one(&ip(&[-2, 0, 1])), ip(&[-1, 2, 1]));
        assert_eq!(taylor_shift_one(&ip(&[0, 0, 0, 1])), ip(&[1, 3, 3, 1]));
    }

    #[test]
    fn gcd_and_division() {
        let a = ip(&[-1, 0, 1]); // z^2 - 1
        let b = ip(&[-2, 2]); // 2z - 2
        assert_eq!(gcd(&a, &b), ip(&[-1, 1]));
        assert_eq!(exact_div(&a, &ip(&[1, 1])).unwrap(), ip(&[-1, 1]));
        assert!(exact_div(&a, &ip(&[1, 2])).is_none());
        assert_eq!(gcd(&ip(&[1, 0, 1]), &ip(&[2, 0, 1])), ip(&[1]));
    }

    #[test]
    fn homogeneous_eval_sign() {
        let p = ip(&[-2, 0, 1]);
        assert_eq!(sign_at(&p, &crate::rational::rat(3, 2)), 1);
        assert_eq!(sign_at(&p, &crate::rational::rat(4, 3)), -1);
        assert_eq!(sign_at_infinity(&ip(&[0, 0, 0, -1]), false), 1);
        assert_eq!(sign_variations(&ip(&[1, 0, -1, 2])), 2);
    }
}
