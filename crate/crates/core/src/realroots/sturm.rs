//! Sturm chains over ℤ (primitive, positively rescaled remainders).

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::intpoly::{self, IntPoly};
use crate::poly::Poly;
use crate::rational::{sign_int, Rational};

/// A finite point or one of the two infinities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RatBound {
    NegInf,
    Finite(Rational),
    PosInf,
}

/// The Sturm sequence `f₀ = f, f₁ = f', f_{k+1} = −c·rem(f_{k−1}, f_k)` with `c > 0`.
///
/// Sign variations at `a < b` (both non-roots) differ by the number of distinct
/// real roots of `f` in `(a, b)`; this holds whether or not `f` is square-free.
#[derive(Clone, Debug)]
pub struct SturmChain {
    chain: Vec<IntPoly>,
}

impl SturmChain {
    pub fn new(f: &Poly) -> Result<Self> {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(Self::from_int(f.primitive_int()))
    }

    pub fn from_int(f: IntPoly) -> Self {
        let mut chain = vec![f.clone()];
        let mut d = intpoly::derivative(&f);
        if d.is_empty() {
            return SturmChain { chain };
        }
        intpoly::make_primitive(&mut d);
        chain.push(d);
        loop {
            let n = chain.len();
            let (a, b) = (&chain[n - 2], &chain[n - 1]);
            if b.len() <= 1 {
                break;
            }
            let delta = a.len() - b.len();
            let mut r = intpoly::prem(a, b);
            if r.is_empty() {
                break;
            }
            // prem = lc(b)^{δ+1}·rem, so −rem has the sign of −prem·sign(lc b)^{δ+1}.
            let flip = sign_int(b.last().expect("nonzero")) < 0 && delta % 2 == 0;
            if !flip {
                for c in r.iter_mut() {
                    *c = -&*c;
                }
            }
            intpoly::make_primitive(&mut r);
            chain.push(r);
        }
        SturmChain { chain }
    }

    /// The chain as rational polynomials.
    pub fn polys(&self) -> Vec<Poly> {
        self.chain.iter().map(|c| Poly::from_int(c)).collect()
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    /// The defining polynomial (integer primitive form).
    pub fn head(&self) -> &IntPoly {
        &self.chain[0]
    }

    /// Last element: `gcd(f, f')` up to a nonzero constant.
    pub fn last(&self) -> &IntPoly {
        self.chain.last().expect("nonempty")
    }

    fn variations(signs: impl Iterator<Item = i8>) -> usize {
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

    /// Sign variations at a rational point (zeros skipped).
    pub fn variations_at(&self, x: &Rational) -> usize {
        Self::variations(self.chain.iter().map(|c| intpoly::sign_at(c, x)))
    }

    /// Sign variations at `+∞` or `−∞`.
    pub fn variations_at_infinity(&self, pos: bool) -> usize {
        Self::variations(self.chain.iter().map(|c| intpoly::sign_at_infinity(c, pos)))
    }

    /// Sign variations just to the right (`right = true`) or left of `x`.
    pub fn variations_beside(&self, x: &Rational, right: bool) -> usize {
        Self::variations(self.chain.iter().map(|c| one_sided_sign(c, x, right)))
    }

    fn variations_bound(&self, b: &RatBound, right: bool) -> usize {
        match b {
            RatBound::NegInf => self.variations_at_infinity(false),
            RatBound::PosInf => self.variations_at_infinity(true),
            RatBound::Finite(x) => self.variations_beside(x, right),
        }
    }

    /// Distinct real roots in the open range `(lo, hi)`.
    pub fn count_open(&self, lo: &RatBound, hi: &RatBound) -> usize {
        let a = self.variations_bound(lo, true);
        let b = self.variations_bound(hi, false);
        a.saturating_sub(b)
    }

    /// Distinct real roots in the closed interval `[lo, hi]`.
    pub fn count_closed(&self, lo: &Rational, hi: &Rational) -> usize {
        let head = self.head();
        let mut n = self.count_open(&RatBound::Finite(lo.clone()), &RatBound::Finite(hi.clone()));
        if intpoly::sign_at(head, lo) == 0 {
            n += 1;
        }
        if hi != lo && intpoly::sign_at(head, hi) == 0 {
            n += 1;
        }
        n
    }

    /// Distinct real roots on the whole line.
    pub fn count_all(&self) -> usize {
        self.count_open(&RatBound::NegInf, &RatBound::PosInf)
    }
}

/// Sign of `p` just right (or left) of `x`: the first nonvanishing derivative decides.
pub fn one_sided_sign(p: &[BigInt], x: &Rational, right: bool) -> i8 {
    let s = intpoly::sign_at(p, x);
    if s != 0 || p.is_empty() {
        return s;
    }
    let mut d = p.to_vec();
    let mut k = 0usize;
    loop {
        d = intpoly::derivative(&d);
        k += 1;
        let s = intpoly::sign_at(&d, x);
        if s != 0 {
            return if right || k.is_multiple_of(2) { s } else { -s };
        }
    }
}
