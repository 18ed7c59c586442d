//! Real root isolation: Descartes' rule of signs with bisection on square-free factors.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::algebraic::{compare_mut, AlgebraicNumber};
use super::sturm::{RatBound, SturmChain};
use crate::error::{Error, Result};
use crate::poly::intpoly::{self, IntPoly};
use crate::poly::{squarefree_decomposition, Poly};
use crate::rational::{self, Rational};

/// Isolated real roots of a polynomial, increasing, with exact multiplicities.
#[derive(Clone, Debug, Default)]
pub struct RootList {
    roots: Vec<(AlgebraicNumber, usize)>,
}

impl RootList {
    pub fn roots(&self) -> &[(AlgebraicNumber, usize)] {
        &self.roots
    }

    pub fn into_roots(self) -> Vec<(AlgebraicNumber, usize)> {
        self.roots
    }

    /// Number of distinct real roots.
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// Real roots counted with multiplicity.
    pub fn total(&self) -> usize {
        self.roots.iter().map(|(_, m)| m).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = &(AlgebraicNumber, usize)> {
        self.roots.iter()
    }
}

/// Isolating intervals of the real roots of a square-free integer polynomial.
///
/// Returns increasing pairs `(lo, hi)`; `lo == hi` marks an exact rational root,
/// otherwise the open interval holds exactly one root and its ends are not roots.
pub fn isolate_squarefree(f: &IntPoly) -> Vec<(Rational, Rational)> {
    let mut f = f.clone();
    intpoly::trim(&mut f);
    let mut out = Vec::new();
    if f.len() <= 1 {
        return out;
    }
    let orig = f.clone();
    if f[0].is_zero() {
        out.push((Rational::zero(), Rational::zero()));
        f.remove(0);
    }
    for (a, b) in isolate_positive(&f) {
        out.push((a, b));
    }
    let mirrored: IntPoly = f
        .iter()
        .enumerate()
        .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
        .collect();
    for (a, b) in isolate_positive(&mirrored) {
        out.push((-b, -a));
    }
    out.sort_by(|x, y| x.0.cmp(&y.0));
    // A midpoint root found during bisection may sit on a neighbour's end.
    let mut chain = None;
    for (lo, hi) in out.iter_mut() {
        if lo == hi {
            continue;
        }
        while intpoly::sign_at(&orig, lo) == 0 || intpoly::sign_at(&orig, hi) == 0 {
            let chain = chain.get_or_insert_with(|| SturmChain::from_int(orig.clone()));
            let mid = (&*lo + &*hi) / rational::int(2);
            if intpoly::sign_at(&orig, &mid) == 0 {
                *lo = mid.clone();
                *hi = mid;
                break;
            }
            let left = chain.count_open(&RatBound::Finite(lo.clone()), &RatBound::Finite(mid.clone()));
            if left == 1 {
                *hi = mid;
            } else {
                *lo = mid;
            }
        }
    }
    out
}

/// Roots in `(0, ∞)` of `f` with `f(0) ≠ 0`.
fn isolate_positive(f: &IntPoly) -> Vec<(Rational, Rational)> {
    let n = f.len() - 1;
    if n == 0 {
        return Vec::new();
    }
    // Power-of-two Cauchy bound 2^k.
    let lc = f[n].abs();
    let max = f[..n].iter().map(|c| c.abs()).max().unwrap_or_else(BigInt::zero);
    let bound = Rational::one() + Rational::new(max, lc);
    let mut k: u64 = 0;
    while rational::pow2(k as i64) < bound {
        k += 1;
    }
    // h(x) = f(2^k x) has its positive roots in (0, 1).
    let mut h: IntPoly = f.iter().enumerate().map(|(i, c)| c << (k as usize * i)).collect();
    intpoly::make_primitive(&mut h);
    let mut out = Vec::new();
    let mut stack = vec![(h, Rational::zero(), rational::pow2(k as i64))];
    while let Some((h, a, w)) = stack.pop() {
        if h.len() <= 1 {
            continue;
        }
        let mut rev = h.clone();
        rev.reverse();
        let v = intpoly::sign_variations(&intpoly::taylor_shift_one(&rev));
        if v == 0 {
            continue;
        }
        if v == 1 {
            out.push((a.clone(), &a + &w));
            continue;
        }
        let half = &w / rational::int(2);
        let mid = &a + &half;
        let mut h1 = intpoly::halve_argument(&h);
        let at_one: BigInt = h1.iter().sum();
        if at_one.is_zero() {
            out.push((mid.clone(), mid.clone()));
            h1 = intpoly::exact_div(&h1, &[-BigInt::one(), BigInt::one()]).expect("x = 1 is a root");
        }
        intpoly::make_primitive(&mut h1);
        let mut h2 = intpoly::taylor_shift_one(&h1);
        intpoly::make_primitive(&mut h2);
        stack.push((h1, a, half.clone()));
        stack.push((h2, mid, half));
    }
    out
}

/// Sorts algebraic numbers increasingly, refining until neighbours are disjoint.
fn sort_refining(mut v: Vec<(AlgebraicNumber, usize)>) -> Vec<(AlgebraicNumber, usize)> {
    // Insertion sort: comparisons refine in place and the lists are short.
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 {
            let (l, r) = v.split_at_mut(j);
            let ord = compare_mut(&mut l[j - 1].0, &mut r[0].0);
            debug_assert!(ord != Ordering::Equal, "roots of coprime factors are distinct");
            if ord == Ordering::Greater {
                v.swap(j - 1, j);
                j -= 1;
            } else {
                break;
            }
        }
    }
    v
}

/// All real roots of `f` with multiplicities.
pub fn isolate_roots(f: &Poly) -> Result<RootList> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut all = Vec::new();
    for (g, mult) in squarefree_decomposition(f)? {
        let gi = g.primitive_int();
        for (lo, hi) in isolate_squarefree(&gi) {
            let mut x = AlgebraicNumber::new_unchecked(g.clone(), gi.clone(), lo, hi);
            x.detect_rational();
            all.push((x, mult));
        }
    }
    Ok(RootList {
        roots: sort_refining(all),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    #[test]
    fn examples() {
        let r = isolate_roots(&Poly::from_i64(&[0, 0, 1, 0, 1])).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r.roots()[0].0.as_rational(), Some(&int(0)));
        assert_eq!(r.roots()[0].1, 2);

        let f = &Poly::z() * &Poly::new(vec![rat(-1, 4), int(0), int(1)]);
        let r = isolate_roots(&f).unwrap();
        let vals: Vec<_> = r.iter().map(|(x, m)| (x.as_rational().cloned(), *m)).collect();
        assert_eq!(
            vals,
            vec![(Some(rat(-1, 2)), 1), (Some(int(0)), 1), (Some(rat(1, 2)), 1)]
        );

        let r = isolate_roots(&Poly::from_i64(&[-2, 0, 1])).unwrap();
        assert_eq!(r.len(), 2);
        let (a, b) = (&r.roots()[0].0, &r.roots()[1].0);
        assert!(a.hi() <= b.lo());
        assert!(a.refined(&rat(1, 100)).hi() < &rat(-14, 10));
    }

    #[test]
    fn clustered_roots_are_separated() {
        // (z - 1)(z - 1001/1000)(z - 1002/1000)
        let f = &(&Poly::linear_root(&int(1)) * &Poly::linear_root(&rat(1001, 1000)))
            * &Poly::linear_root(&rat(1002, 1000));
        let r = isolate_roots(&f).unwrap();
        let vals: Vec<_> = r.iter().map(|(x, _)| x.as_rational().cloned().unwrap()).collect();
        assert_eq!(vals, vec![int(1), rat(1001, 1000), rat(1002, 1000)]);
    }

    #[test]
    fn multiplicities_sum_to_real_count() {
        let f = &(&Poly::from_i64(&[-1, 1]).pow(3) * &Poly::from_i64(&[2, 1]).pow(2)) * &Poly::from_i64(&[-3, 0, 1]);
        let r = isolate_roots(&f).unwrap();
        assert_eq!(r.total(), 7);
        assert_eq!(r.len(), 4);
    }
}
