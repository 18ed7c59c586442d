//! Root counting for polynomials whose coefficients live in `ℚ(σ)`, with `σ`
//! a fixed real algebraic number.
//!
//! Coefficients are polynomials in `σ` reduced modulo its defining polynomial.
//! The defining polynomial is only square-free, so `ℚ[σ]/(m)` may have zero
//! divisors; the computation never divides, it only evaluates signs at `σ`.
//! Leading coefficients that vanish at `σ` are dropped, so every chain below
//! is exactly the (positively rescaled) Sturm chain of `f(σ, ·)` over ℝ.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::algebraic::{compare_mut, sign_at_mut, AlgebraicNumber};
use super::sturm::RatBound;
use crate::error::{Error, Result};
use crate::poly::{Interval, Poly};
use crate::rational::{self, Rational};

/// Polynomial in `z` whose `k`-th entry is the coefficient of `z^k`, a polynomial in `σ`.
pub type SigmaPoly = Vec<Poly>;

/// A real root of `f(σ, ·)`: the only one in the open interval `(lo, hi)`,
/// or exactly `lo` when `lo == hi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtRoot {
    pub lo: Rational,
    pub hi: Rational,
}

impl ExtRoot {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }
}

/// Arithmetic and sign evaluation in `ℚ(σ)` for a fixed algebraic `σ`.
#[derive(Clone, Debug)]
pub struct ExtContext {
    sigma: AlgebraicNumber,
    modulus: Poly,
}

impl ExtContext {
    pub fn new(sigma: AlgebraicNumber) -> Self {
        let modulus = sigma.poly().clone();
        ExtContext { sigma, modulus }
    }

    pub fn sigma(&self) -> &AlgebraicNumber {
        &self.sigma
    }

    fn reduce(&self, c: &Poly) -> Poly {
        if c.degree() < self.modulus.degree() {
            c.clone()
        } else {
            c.rem(&self.modulus).expect("modulus is nonzero")
        }
    }

    /// Exact sign of the coefficient `c(σ)`.
    pub fn sign(&mut self, c: &Poly) -> i8 {
        let c = self.reduce(c);
        sign_at_mut(&c, &mut self.sigma)
    }

    /// Enclosure of `c(σ)` on the current interval of `σ`.
    fn enclose(&self, c: &Poly) -> Interval {
        c.eval_interval(&self.sigma.interval())
    }

    /// Reduces every coefficient and drops leading terms that vanish at `σ`.
    pub fn normalize(&mut self, f: &[Poly]) -> SigmaPoly {
        let mut v: SigmaPoly = f.iter().map(|c| self.reduce(c)).collect();
        while let Some(c) = v.last() {
            if self.sign(c) == 0 {
                v.pop();
            } else {
                break;
            }
        }
        remove_content(&mut v);
        v
    }

    /// Degree of `f(σ, ·)`, `None` when it vanishes identically.
    pub fn degree(&mut self, f: &[Poly]) -> Option<usize> {
        self.normalize(f).len().checked_sub(1)
    }

    /// `f(σ, t)` as a polynomial in `σ`.
    fn eval_point(&self, f: &[Poly], t: &Rational) -> Poly {
        let mut acc = Poly::zero();
        for c in f.iter().rev() {
            acc = &acc.scale(t) + c;
        }
        self.reduce(&acc)
    }

    /// Exact sign of `f(σ, t)`.
    pub fn sign_at_point(&mut self, f: &[Poly], t: &Rational) -> i8 {
        let v = self.eval_point(f, t);
        self.sign(&v)
    }

    fn one_sided_sign(&mut self, f: &[Poly], t: &Rational, right: bool) -> i8 {
        let mut d = f.to_vec();
        let mut k = 0usize;
        while !d.is_empty() {
            let s = self.sign_at_point(&d, t);
            if s != 0 {
                return if right || k.is_multiple_of(2) { s } else { -s };
            }
            d = derivative(&d);
            k += 1;
        }
        0
    }

    fn sign_at_infinity(&mut self, f: &[Poly], pos: bool) -> i8 {
        let Some(lc) = f.last() else { return 0 };
        let s = self.sign(lc);
        if pos || (f.len() - 1).is_multiple_of(2) {
            s
        } else {
            -s
        }
    }

    /// `−rem(a, b)` up to a positive factor, via pseudo-division.
    fn neg_rem(&mut self, a: &[Poly], b: &[Poly]) -> SigmaPoly {
        let db = b.len() - 1;
        let lb = b[db].clone();
        let delta = a.len() - b.len();
        let mut r: SigmaPoly = a.to_vec();
        let mut steps = delta + 1;
        while r.len() >= b.len() {
            let dr = r.len() - 1;
            let lr = r[dr].clone();
            let shift = dr - db;
            for c in r.iter_mut() {
                *c = self.reduce(&(&*c * &lb));
            }
            for (k, bc) in b.iter().enumerate() {
                r[k + shift] = self.reduce(&(&r[k + shift] - &(&lr * bc)));
            }
            r.pop();
            r = self.normalize(&r);
            steps -= 1;
        }
        // The missing powers of lc(b) only matter through their sign.
        let odd = self.sign(&lb) < 0 && (delta + 1 - steps) % 2 == 1;
        if !odd {
            r = r.iter().map(|c| -c).collect();
        }
        r
    }

    /// Sturm chain of `f(σ, ·)`; empty if `f(σ, ·)` vanishes identically.
    pub fn sturm_chain(&mut self, f: &[Poly]) -> Vec<SigmaPoly> {
        let f0 = self.normalize(f);
        if f0.is_empty() {
            return Vec::new();
        }
        let f1 = self.normalize(&derivative(&f0));
        let mut chain = vec![f0];
        if f1.is_empty() {
            return chain;
        }
        chain.push(f1);
        loop {
            let n = chain.len();
            if chain[n - 1].len() <= 1 {
                break;
            }
            let r = self.neg_rem(&chain[n - 2], &chain[n - 1]);
            if r.is_empty() {
                break;
            }
            chain.push(r);
        }
        chain
    }

    fn variations(&mut self, chain: &[SigmaPoly], at: &RatBound, right: bool) -> usize {
        let signs: Vec<i8> = chain
            .iter()
            .map(|f| match at {
                RatBound::NegInf => self.sign_at_infinity(f, false),
                RatBound::PosInf => self.sign_at_infinity(f, true),
                RatBound::Finite(t) => self.one_sided_sign(f, t, right),
            })
            .collect();
        let mut last = 0i8;
        let mut v = 0;
        for s in signs {
            if s != 0 {
                if last != 0 && s != last {
                    v += 1;
                }
                last = s;
            }
        }
        v
    }

    /// Distinct real roots of the chain's head in the open range `(lo, hi)`.
    pub fn count_distinct(&mut self, chain: &[SigmaPoly], lo: &RatBound, hi: &RatBound) -> usize {
        if chain.is_empty() {
            return 0;
        }
        let a = self.variations(chain, lo, true);
        let b = self.variations(chain, hi, false);
        a.saturating_sub(b)
    }

    /// Real roots of `f(σ, ·)` in `(lo, hi)`, optionally with multiplicity.
    pub fn count_roots(&mut self, f: &[Poly], lo: &RatBound, hi: &RatBound, with_multiplicity: bool) -> Result<usize> {
        check_range(lo, hi)?;
        let mut chain = self.sturm_chain(f);
        if chain.is_empty() {
            return Err(Error::ZeroPolynomial);
        }
        let mut total = 0;
        loop {
            total += self.count_distinct(&chain, lo, hi);
            if !with_multiplicity {
                break;
            }
            // The last chain element is gcd(f, f'); its roots carry multiplicity − 1.
            let g = chain.last().expect("nonempty").clone();
            if g.len() <= 1 {
                break;
            }
            chain = self.sturm_chain(&g);
        }
        Ok(total)
    }

    /// Strict bound on the modulus of the roots of `f(σ, ·)`.
    fn cauchy_bound(&mut self, f: &[Poly]) -> Rational {
        let n = f.len() - 1;
        // The leading coefficient is nonzero at σ; refine until its enclosure excludes 0.
        let mut lead = self.enclose(&f[n]);
        while lead.contains_zero() {
            self.sigma.refine_once();
            lead = self.enclose(&f[n]);
        }
        let max = f[..n]
            .iter()
            .map(|c| self.enclose(c).mag())
            .max()
            .unwrap_or_else(Rational::zero);
        Rational::one() + max / lead.mig()
    }

    /// Isolates the distinct real roots of `f(σ, ·)`, increasing.
    pub fn isolate(&mut self, f: &[Poly]) -> (Vec<SigmaPoly>, Vec<ExtRoot>) {
        let chain = self.sturm_chain(f);
        let mut out = Vec::new();
        if chain.is_empty() || chain[0].len() <= 1 {
            return (chain, out);
        }
        let b = self.cauchy_bound(&chain[0]);
        let mut stack = vec![(-b.clone(), b)];
        while let Some((lo, hi)) = stack.pop() {
            let n = self.count_distinct(&chain, &RatBound::Finite(lo.clone()), &RatBound::Finite(hi.clone()));
            if n == 0 {
                continue;
            }
            if n == 1 {
                out.push(ExtRoot { lo, hi });
                continue;
            }
            let mid = (&lo + &hi) / rational::int(2);
            if self.sign_at_point(&chain[0], &mid) == 0 {
                out.push(ExtRoot {
                    lo: mid.clone(),
                    hi: mid.clone(),
                });
            }
            stack.push((mid.clone(), hi));
            stack.push((lo, mid));
        }
        out.sort_by(|x, y| x.lo.cmp(&y.lo).then(x.hi.cmp(&y.hi)));
        (chain, out)
    }

    /// Halves the interval of a non-exact root (or lands on it exactly).
    pub fn refine_root(&mut self, chain: &[SigmaPoly], r: &mut ExtRoot) {
        if r.is_exact() {
            return;
        }
        let mid = (&r.lo + &r.hi) / rational::int(2);
        if self.sign_at_point(&chain[0], &mid) == 0 {
            r.lo = mid.clone();
            r.hi = mid;
            return;
        }
        let left = self.count_distinct(chain, &RatBound::Finite(r.lo.clone()), &RatBound::Finite(mid.clone()));
        if left == 1 {
            r.hi = mid;
        } else {
            r.lo = mid;
        }
    }

    /// Order of the root `r` relative to the algebraic number `x`.
    ///
    /// `x_is_root` states whether `f(σ, x) = 0`; the caller decides it exactly,
    /// which makes equality decidable without numeric closeness.
    pub fn compare_root(
        &mut self,
        chain: &[SigmaPoly],
        r: &mut ExtRoot,
        x: &mut AlgebraicNumber,
        x_is_root: bool,
    ) -> Ordering {
        loop {
            if r.is_exact() {
                let mut q = AlgebraicNumber::rational(r.lo.clone());
                return compare_mut(&mut q, x);
            }
            if &r.hi <= x.lo() {
                return Ordering::Less;
            }
            if x.hi() <= &r.lo {
                return Ordering::Greater;
            }
            if x_is_root {
                let inside = match x.as_rational() {
                    Some(v) => &r.lo < v && v < &r.hi,
                    None => &r.lo <= x.lo() && x.hi() <= &r.hi,
                };
                if inside {
                    return Ordering::Equal;
                }
                x.refine_once();
            } else if r.width() >= x.width() {
                self.refine_root(chain, r);
            } else {
                x.refine_once();
            }
        }
    }
}

fn check_range(lo: &RatBound, hi: &RatBound) -> Result<()> {
    let ok = match (lo, hi) {
        (RatBound::PosInf, _) | (_, RatBound::NegInf) => false,
        (RatBound::NegInf, _) | (_, RatBound::PosInf) => true,
        (RatBound::Finite(a), RatBound::Finite(b)) => a < b,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::MalformedRange)
    }
}

/// Formal `z`-derivative.
pub fn derivative(f: &[Poly]) -> SigmaPoly {
    f.iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c.scale(&rational::int(k as i64)))
        .collect()
}

/// Divides out the positive rational content of all coefficients.
fn remove_content(f: &mut SigmaPoly) {
    let mut num = BigInt::zero();
    let mut den = BigInt::one();
    for c in f.iter() {
        for x in c.coeffs() {
            num = num.gcd(x.numer());
            den = den.lcm(x.denom());
        }
    }
    if num.is_zero() {
        return;
    }
    let content = Rational::new(num, den);
    if content.is_one() {
        return;
    }
    let inv = content.recip();
    for c in f.iter_mut() {
        *c = c.scale(&inv);
    }
}

/// Real roots of `f(σ, z)` in the open range `(lo, hi)` for algebraic `σ`.
pub fn count_roots_extension(
    f: &[Poly],
    sigma: &AlgebraicNumber,
    lo: &RatBound,
    hi: &RatBound,
    with_multiplicity: bool,
) -> Result<usize> {
    ExtContext::new(sigma.clone()).count_roots(f, lo, hi, with_multiplicity)
}
