//! Exact root counting on open ranges whose ends may be algebraic or infinite.

use std::cmp::Ordering;

use num_traits::Zero;

use super::algebraic::{compare_mut, sign_at_mut, AlgebraicNumber};
use super::sturm::{RatBound, SturmChain};
use crate::error::{Error, Result};
use crate::poly::{squarefree_decomposition, Poly};
use crate::rational::Rational;

/// End of a counting range.
#[derive(Clone, Debug)]
pub enum Bound {
    NegInf,
    PosInf,
    At(AlgebraicNumber),
}

impl Bound {
    pub fn rational(r: Rational) -> Self {
        Bound::At(AlgebraicNumber::rational(r))
    }
}

/// Strict order of two bounds, refining algebraic ends in place.
pub fn bound_less(a: &mut Bound, b: &mut Bound) -> bool {
    match (a, b) {
        (Bound::NegInf, Bound::NegInf) | (Bound::PosInf, _) | (_, Bound::NegInf) => false,
        (Bound::NegInf, _) | (_, Bound::PosInf) => true,
        (Bound::At(x), Bound::At(y)) => compare_mut(x, y) == Ordering::Less,
    }
}

struct Factor {
    poly: Poly,
    chain: SturmChain,
    mult: usize,
}

/// Square-free factors of a polynomial with their Sturm chains, for repeated counting.
pub struct RootCounter {
    factors: Vec<Factor>,
}

impl RootCounter {
    pub fn new(f: &Poly) -> Result<Self> {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let factors = squarefree_decomposition(f)?
            .into_iter()
            .map(|(poly, mult)| {
                let chain = SturmChain::new(&poly).expect("nonzero");
                Factor { poly, chain, mult }
            })
            .collect();
        Ok(RootCounter { factors })
    }

    /// Roots in the open range `(lo, hi)`; `lo` must lie strictly below `hi`.
    pub fn count(&self, lo: &Bound, hi: &Bound, with_multiplicity: bool) -> Result<usize> {
        let (mut lo, mut hi) = (lo.clone(), hi.clone());
        if !bound_less(&mut lo, &mut hi) {
            return Err(Error::MalformedRange);
        }
        let mut total = 0;
        for f in &self.factors {
            let n = above(f, &mut lo) - at_or_above(f, &mut hi);
            total += if with_multiplicity { n * f.mult } else { n };
        }
        Ok(total)
    }

    /// Roots on the whole real line.
    pub fn count_all(&self, with_multiplicity: bool) -> usize {
        self.factors
            .iter()
            .map(|f| {
                let n = f.chain.count_all();
                if with_multiplicity {
                    n * f.mult
                } else {
                    n
                }
            })
            .sum()
    }

    /// Multiplicity of `x` as a root (0 if not a root).
    pub fn multiplicity_at(&self, x: &mut AlgebraicNumber) -> usize {
        self.factors
            .iter()
            .find(|f| sign_at_mut(&f.poly, x) == 0)
            .map_or(0, |f| f.mult)
    }
}

/// Distinct roots of the factor strictly above the bound.
fn above(f: &Factor, b: &mut Bound) -> usize {
    let top = f.chain.variations_at_infinity(true);
    match b {
        Bound::NegInf => f.chain.count_all(),
        Bound::PosInf => 0,
        Bound::At(x) => {
            if let Some(r) = x.as_rational() {
                return f.chain.variations_beside(r, true) - top;
            }
            let is_root = sign_at_mut(&f.poly, x) == 0;
            let want = usize::from(is_root);
            // Refine until x's interval contains no root of f other than x itself.
            loop {
                if let Some(r) = x.as_rational() {
                    return f.chain.variations_beside(r, true) - top;
                }
                if f.chain.count_closed(x.lo(), x.hi()) == want {
                    return f.chain.variations_at(x.hi()) - top;
                }
                x.refine_once();
            }
        }
    }
}

fn at_or_above(f: &Factor, b: &mut Bound) -> usize {
    let on = match b {
        Bound::At(x) => usize::from(sign_at_mut(&f.poly, x) == 0),
        _ => 0,
    };
    above(f, b) + on
}

/// Roots of `f` in the open range `(lo, hi)`, with or without multiplicity.
pub fn count_roots(f: &Poly, lo: &Bound, hi: &Bound, with_multiplicity: bool) -> Result<usize> {
    RootCounter::new(f)?.count(lo, hi, with_multiplicity)
}

/// Distinct roots of `f` in `(a, b]` for rationals `a < b`, straight from a Sturm chain.
pub fn count_half_open(f: &Poly, a: &Rational, b: &Rational) -> Result<usize> {
    let chain = SturmChain::new(f)?;
    if a >= b {
        return Err(Error::MalformedRange);
    }
    let open = chain.count_open(&RatBound::Finite(a.clone()), &RatBound::Finite(b.clone()));
    Ok(open + usize::from(f.eval(b).is_zero()))
}
