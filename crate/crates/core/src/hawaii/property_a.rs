//! Property A: at each real zero `α` of `φ`, `Q` has no real zeros on at
//! least one side between `α` and the nearest real zero of `φ'`.

use std::cmp::Ordering;

use crate::error::Result;
use crate::lpstar::{Analysis, LpStarFn};
use crate::realroots::{compare_mut, AlgebraicNumber, Bound, RootCounter};

/// The verdict at one real zero of `φ`.
#[derive(Clone, Debug)]
pub struct ZeroVerdict {
    pub alpha: AlgebraicNumber,
    pub multiplicity: usize,
    /// Nearest real zero of `φ'` strictly below `α`, or `−∞`.
    pub beta1: Bound,
    /// Nearest real zero of `φ'` strictly above `α`, or `+∞`.
    pub beta2: Bound,
    /// `Q` has no real zeros in `(β₁, α)`.
    pub left_clear: bool,
    /// `Q` has no real zeros in `(α, β₂)`.
    pub right_clear: bool,
    pub holds: bool,
    /// Verdict when `β₁ = −∞` at the smallest zero and `β₂ = +∞` at the largest.
    pub literal_holds: bool,
}

/// Property A at every real zero of `φ`.
#[derive(Clone, Debug)]
pub struct PropertyAVerdict {
    pub per_zero: Vec<ZeroVerdict>,
    pub overall: bool,
    /// Overall verdict under the outermost-infinite reading of the definition.
    pub literal_overall: bool,
}

impl PropertyAVerdict {
    /// True when the two readings of the outermost intervals disagree.
    pub fn readings_differ(&self) -> bool {
        self.overall != self.literal_overall
    }

    pub fn from_analysis(an: &Analysis) -> Result<Self> {
        let q = RootCounter::new(&an.pair.q_num)?;
        let betas: Vec<AlgebraicNumber> = an.p1_roots.iter().map(|(x, _)| x.clone()).collect();
        let n = an.p_roots.len();
        let mut per_zero = Vec::with_capacity(n);
        for (j, (alpha, mult)) in an.p_roots.iter().enumerate() {
            let mut alpha = alpha.clone();
            let (beta1, beta2) = nearest_beyond(&betas, &mut alpha);
            let at = Bound::At(alpha.clone());
            let clear = |lo: &Bound, hi: &Bound| -> Result<bool> { Ok(q.count(lo, hi, false)? == 0) };
            let left_clear = clear(&beta1, &at)?;
            let right_clear = clear(&at, &beta2)?;
            let literal_left = if j == 0 {
                clear(&Bound::NegInf, &at)?
            } else {
                left_clear
            };
            let literal_right = if j + 1 == n {
                clear(&at, &Bound::PosInf)?
            } else {
                right_clear
            };
            per_zero.push(ZeroVerdict {
                alpha,
                multiplicity: *mult,
                beta1,
                beta2,
                left_clear,
                right_clear,
                holds: left_clear || right_clear,
                literal_holds: literal_left || literal_right,
            });
        }
        let overall = per_zero.iter().all(|z| z.holds);
        let literal_overall = per_zero.iter().all(|z| z.literal_holds);
        Ok(PropertyAVerdict {
            per_zero,
            overall,
            literal_overall,
        })
    }
}

/// Nearest elements of the sorted list strictly below and strictly above `x`.
pub(crate) fn nearest_beyond(sorted: &[AlgebraicNumber], x: &mut AlgebraicNumber) -> (Bound, Bound) {
    let mut below = Bound::NegInf;
    let mut above = Bound::PosInf;
    for b in sorted {
        let mut b = b.clone();
        match compare_mut(&mut b, x) {
            Ordering::Less => below = Bound::At(b),
            Ordering::Equal => {}
            Ordering::Greater => {
                above = Bound::At(b);
                break;
            }
        }
    }
    (below, above)
}

/// Property A of `f`.
pub fn check_property_a(f: &LpStarFn) -> Result<PropertyAVerdict> {
    PropertyAVerdict::from_analysis(&f.analyze()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Poly;

    #[test]
    fn no_real_zeros_is_vacuous() {
        let f = LpStarFn::polynomial(Poly::from_i64(&[1, 0, 1])).unwrap();
        let v = check_property_a(&f).unwrap();
        assert!(v.overall && v.per_zero.is_empty());
    }

    #[test]
    fn real_rooted_polynomial_holds() {
        let f = LpStarFn::polynomial(Poly::from_i64(&[0, -1, 0, 1])).unwrap();
        let v = check_property_a(&f).unwrap();
        assert_eq!(v.per_zero.len(), 3);
        assert!(v.overall && v.literal_overall);
    }
}
