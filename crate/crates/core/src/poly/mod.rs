//! Dense univariate polynomials with exact rational coefficients.

mod gcd;
pub mod interval;
pub mod intpoly;
mod resultant;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub use gcd::{gcd, squarefree_decomposition, squarefree_part};
pub use interval::Interval;
pub use intpoly::IntPoly;
pub use resultant::{resultant, resultant_sigma};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// A polynomial `c₀ + c₁ z + … + c_n z^n` with `c_n ≠ 0`; the empty vector is zero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    /// Builds from ascending coefficients, dropping trailing zeros.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    /// The identity polynomial `z`.
    pub fn z() -> Self {
        Poly::monomial(Rational::one(), 1)
    }

    /// `c·z^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut v = vec![Rational::zero(); k + 1];
        v[k] = c;
        Poly::new(v)
    }

    /// Builds from ascending machine-integer coefficients.
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| rational::int(c)).collect())
    }

    /// Builds from ascending integer coefficients.
    pub fn from_int(coeffs: &[BigInt]) -> Self {
        Poly::new(coeffs.iter().cloned().map(Rational::from_integer).collect())
    }

    /// `z − r`.
    pub fn linear_root(r: &Rational) -> Self {
        Poly::new(vec![-r.clone(), Rational::one()])
    }

    /// Ascending coefficients.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `z^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// Degree, or `None` for the zero polynomial (whose degree is `−∞`).
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0; for size estimates only.
    pub fn degree_or_zero(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True for nonzero constants and for zero.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Enclosure of `{f(x) : x ∈ iv}` by interval Horner evaluation.
    pub fn eval_interval(&self, iv: &Interval) -> Interval {
        if iv.lo == iv.hi {
            return Interval::point(self.eval(&iv.lo));
        }
        let mut acc = Interval::point(Rational::zero());
        for c in self.coeffs.iter().rev() {
            let m = &acc * iv;
            acc = Interval {
                lo: m.lo + c,
                hi: m.hi + c,
            };
        }
        acc
    }

    /// Sign of `f(x)` as `-1`, `0`, `1`.
    pub fn sign_at(&self, x: &Rational) -> i8 {
        rational::sign(&self.eval(x))
    }

    /// Sign of `f` at `+∞` or `−∞`.
    pub fn sign_at_infinity(&self, pos: bool) -> i8 {
        match self.leading() {
            None => 0,
            Some(lc) => {
                let s = rational::sign(lc);
                if pos || self.coeffs.len() % 2 == 1 {
                    s
                } else {
                    -s
                }
            }
        }
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    /// `c·f`.
    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn pow(&self, k: usize) -> Poly {
        let mut result = Poly::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// `f(−z)`.
    pub fn mirror(&self) -> Poly {
        Poly {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    /// Euclidean division `f = q·d + r`, `deg r < deg d`.
    pub fn div_rem(&self, d: &Poly) -> Result<(Poly, Poly)> {
        let dd = d.degree().ok_or(Error::ZeroPolynomial)?;
        let Some(df) = self.degree() else {
            return Ok((Poly::zero(), Poly::zero()));
        };
        if df < dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let inv = d.coeffs[dd].recip();
        let mut r = self.coeffs.clone();
        let mut q = vec![Rational::zero(); df - dd + 1];
        for k in (0..=df - dd).rev() {
            let c = &r[k + dd] * &inv;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[k + j] -= &c * dc;
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        Ok((Poly::new(q), Poly::new(r)))
    }

    /// Quotient of an exact division; fails if the remainder is nonzero.
    pub fn exact_div(&self, d: &Poly) -> Result<Poly> {
        if d.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        // Work on integer primitive parts to avoid rational normalization costs.
        let (cf, f) = self.to_primitive();
        let (cd, g) = d.to_primitive();
        if f.is_empty() {
            return Ok(Poly::zero());
        }
        let q = intpoly::exact_div(&f, &g).ok_or(Error::InexactDivision)?;
        Ok(Poly::from_int(&q).scale(&(cf / cd)))
    }

    /// `f mod d`.
    pub fn rem(&self, d: &Poly) -> Result<Poly> {
        Ok(self.div_rem(d)?.1)
    }

    /// Splits `f = c·F` with `F` integer primitive and `c > 0`.
    pub fn to_primitive(&self) -> (Rational, IntPoly) {
        if self.is_zero() {
            return (Rational::one(), Vec::new());
        }
        let mut l = BigInt::one();
        for c in &self.coeffs {
            l = l.lcm(c.denom());
        }
        let mut ints: IntPoly = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(l.clone())).to_integer())
            .collect();
        let g = intpoly::content(&ints);
        for c in ints.iter_mut() {
            *c = &*c / &g;
        }
        (Rational::new(g, l), ints)
    }

    /// The integer primitive part with the sign of `f` preserved.
    pub fn primitive_int(&self) -> IntPoly {
        self.to_primitive().1
    }

    /// Sum of absolute values of the coefficients; used for crude bounds.
    pub fn norm1(&self) -> Rational {
        self.coeffs.iter().map(|c| c.abs()).fold(Rational::zero(), |a, b| a + b)
    }

    /// Strict bound `1 + max |cᵢ / c_n|` on the modulus of every root.
    pub fn cauchy_bound(&self) -> Result<Rational> {
        let lc = self.leading().ok_or(Error::ZeroPolynomial)?.abs();
        let m = self.coeffs[..self.coeffs.len() - 1]
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(Rational::zero);
        Ok(Rational::one() + m / lc)
    }

    /// Renders with the given variable name, highest degree first.
    pub fn to_string_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            if k == 0 {
                s.push_str(&a.to_string());
            } else if a.is_one() {
                s.push_str(&mono);
            } else {
                s.push_str(&format!("{a}*{mono}"));
            }
        }
        s
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_var("z"))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for k in 0..n {
            let c = match (self.coeffs.get(k), rhs.coeffs.get(k)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            };
            v.push(c);
        }
        Poly::new(v)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        // Convolve integer primitive parts, then rescale once.
        let (ca, a) = self.to_primitive();
        let (cb, b) = rhs.to_primitive();
        let mut v = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                v[i + j] += x * y;
            }
        }
        Poly::from_int(&v).scale(&(ca * cb))
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: &Poly) -> Poly {
                (&self).$m(rhs)
            }
        }
        impl $tr<Poly> for &Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn p(c: &[i64]) -> Poly {
        Poly::from_i64(c)
    }

    #[test]
    fn ring_arithmetic() {
        assert_eq!(&p(&[1, 0, 1]) * &p(&[-1, 1]), p(&[-1, 1, -1, 1]));
        assert_eq!(&p(&[1, 2, 3]) * &Poly::zero(), Poly::zero());
        assert_eq!(&p(&[0, -1, 0, 1]) + &p(&[0, 1, 0, -1]), Poly::zero());
        assert_eq!(p(&[0, 0, 1]).degree(), Some(2));
        assert_eq!(Poly::zero().degree(), None);
    }

    #[test]
    fn derivative_power_rule() {
        assert_eq!(p(&[0, 0, 1, 0, 1]).derivative(), p(&[0, 2, 0, 4]));
        assert_eq!(p(&[5]).derivative(), Poly::zero());
    }

    #[test]
    fn division() {
        let (q, r) = p(&[1, 0, 0, 1]).div_rem(&p(&[1, 1])).unwrap();
        assert_eq!(q, p(&[1, -1, 1]));
        assert!(r.is_zero());
        let (q, r) = p(&[1, 0, 1]).div_rem(&p(&[0, 2])).unwrap();
        assert_eq!(q, Poly::new(vec![int(0), rat(1, 2)]));
        assert_eq!(r, p(&[1]));
        assert_eq!(p(&[-1, 0, 1]).exact_div(&p(&[1, 1])).unwrap(), p(&[-1, 1]));
        assert_eq!(p(&[-1, 0, 1]).exact_div(&p(&[1, 2])), Err(Error::InexactDivision));
    }

    #[test]
    fn evaluation() {
        assert_eq!(p(&[1, 0, 1]).eval(&int(2)), int(5));
        let iv = p(&[-2, 0, 1]).eval_interval(&Interval::new(int(1), rat(3, 2)));
        assert!(iv.contains_zero());
        assert_eq!(p(&[0, 0, 0, 1]).sign_at_infinity(false), -1);
    }

    #[test]
    fn display() {
        assert_eq!(p(&[-1, 1, -1, 1]).to_string(), "z^3 - z^2 + z - 1");
        assert_eq!(Poly::new(vec![rat(-1, 4), int(0), int(-2)]).to_string(), "-2*z^2 - 1/4");
        assert_eq!(Poly::zero().to_string(), "0");
    }

    #[test]
    fn primitive_split() {
        let f = Poly::new(vec![rat(1, 2), rat(-3, 4)]);
        let (c, ints) = f.to_primitive();
        assert_eq!(c, rat(1, 4));
        assert_eq!(ints, vec![BigInt::from(2), BigInt::from(-3)]);
    }
}
