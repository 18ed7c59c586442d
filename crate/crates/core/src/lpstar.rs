//! The function model `φ = p·exp(−a z² + b z)` and its zero statistics.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{gcd, Poly};
use crate::rational::{self, Rational};
use crate::realroots::{isolate_roots, RootList};

/// Shape of the exponential factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FnKind {
    /// `a = 0`, `b = 0`.
    Polynomial,
    /// `a = 0`, `b ≠ 0`.
    ExpLinear,
    /// `a > 0`.
    Gaussian,
}

impl FnKind {
    pub fn as_str(self) -> &'static str {
        match self {
            FnKind::Polynomial => "polynomial",
            FnKind::ExpLinear => "exp-linear",
            FnKind::Gaussian => "gaussian",
        }
    }
}

impl fmt::Display for FnKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `φ(z) = p(z)·exp(−a z² + b z)` with real rational data and `a ≥ 0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LpStarFn {
    p: Poly,
    a: Rational,
    b: Rational,
}

impl LpStarFn {
    /// Validates and builds the function; `C·exp(bz)` is rejected.
    pub fn new(p: Poly, a: Rational, b: Rational) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if a.is_negative() {
            return Err(Error::NegativeGaussian);
        }
        if a.is_zero() && p.is_constant() {
            return Err(Error::ExcludedForm);
        }
        Ok(LpStarFn { p, a, b })
    }

    /// A plain polynomial.
    pub fn polynomial(p: Poly) -> Result<Self> {
        Self::new(p, Rational::zero(), Rational::zero())
    }

    pub fn p(&self) -> &Poly {
        &self.p
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn kind(&self) -> FnKind {
        if self.a.is_positive() {
            FnKind::Gaussian
        } else if self.b.is_zero() {
            FnKind::Polynomial
        } else {
            FnKind::ExpLinear
        }
    }

    /// Polynomial parts of `φ, φ', φ'', φ'''`.
    pub fn tower(&self) -> DerivTower {
        DerivTower::new(self)
    }

    /// `exp(−σz)·φ`, which has the same zeros and the same `Q`.
    pub fn shift_by_rational(&self, sigma: &Rational) -> LpStarFn {
        LpStarFn {
            p: self.p.clone(),
            a: self.a.clone(),
            b: &self.b - sigma,
        }
    }

    /// `φ(−z)`.
    pub fn mirror(&self) -> LpStarFn {
        LpStarFn {
            p: self.p.mirror(),
            a: self.a.clone(),
            b: -&self.b,
        }
    }

    /// Full exact analysis: tower, critical pair, root lists and counts.
    pub fn analyze(&self) -> Result<Analysis> {
        Analysis::new(self)
    }

    pub fn count_summary(&self) -> Result<CountSummary> {
        Ok(self.analyze()?.summary)
    }
}

impl fmt::Display for LpStarFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.a.is_zero() && self.b.is_zero() {
            return write!(f, "{}", self.p);
        }
        let quad = Poly::new(vec![Rational::zero(), self.b.clone(), -&self.a]);
        write!(f, "({})*exp({})", self.p, quad)
    }
}

impl fmt::Debug for LpStarFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LpStarFn({self})")
    }
}

/// `φ⁽ᵏ⁾ = exp(−a z² + b z)·P_k` with `P_{k+1} = P_k' + D·P_k`, `D = b − 2az`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivTower {
    pub d: Poly,
    pub p0: Poly,
    pub p1: Poly,
    pub p2: Poly,
    pub p3: Poly,
}

impl DerivTower {
    pub fn new(f: &LpStarFn) -> Self {
        let d = Poly::new(vec![f.b.clone(), -(&f.a * rational::int(2))]);
        let step = |q: &Poly| &q.derivative() + &(&d * q);
        let p0 = f.p.clone();
        let p1 = step(&p0);
        let p2 = step(&p1);
        let p3 = step(&p2);
        DerivTower { d, p0, p1, p2, p3 }
    }

    /// The polynomial part of `φ'` after the shift by `σ`: `P1 − σ·P0`.
    pub fn shifted_p1(&self, sigma: &Rational) -> Poly {
        &self.p1 - &self.p0.scale(sigma)
    }
}

/// Numerators of `φφ'' − φ'²` and `φ'φ''' − φ''²` and the reduced fractions
/// `Q = NF/P0²` and `Q₁ = NF1/P1²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalPair {
    pub nf: Poly,
    pub nf1: Poly,
    pub q_num: Poly,
    pub q_den: Poly,
    pub q1_num: Poly,
    pub q1_den: Poly,
}

impl CriticalPair {
    pub fn new(t: &DerivTower) -> Result<Self> {
        if t.p1.is_zero() {
            return Err(Error::ExcludedForm);
        }
        let nf = &(&t.p0 * &t.p2) - &(&t.p1 * &t.p1);
        let nf1 = &(&t.p1 * &t.p3) - &(&t.p2 * &t.p2);
        debug_assert_eq!(
            &nf.derivative() + &(&t.d * &nf).scale(&rational::int(2)),
            &(&t.p0 * &t.p3) - &(&t.p1 * &t.p2),
            "tower identity"
        );
        let (q_num, q_den) = reduce(&nf, &(&t.p0 * &t.p0))?;
        let (q1_num, q1_den) = reduce(&nf1, &(&t.p1 * &t.p1))?;
        Ok(CriticalPair {
            nf,
            nf1,
            q_num,
            q_den,
            q1_num,
            q1_den,
        })
    }

    /// `Q₁` vanishes identically (only for `φ` linear with no exponential factor).
    pub fn q1_is_zero(&self) -> bool {
        self.q1_num.is_zero()
    }
}

/// `num/den` in lowest terms with a monic denominator; `0/den` becomes `0/1`.
fn reduce(num: &Poly, den: &Poly) -> Result<(Poly, Poly)> {
    if num.is_zero() {
        return Ok((Poly::zero(), Poly::one()));
    }
    let g = gcd(num, den)?;
    let n = num.exact_div(&g)?;
    let d = den.exact_div(&g)?;
    let c = d.leading().expect("nonzero").clone();
    let inv = c.recip();
    Ok((n.scale(&inv), d.scale(&inv)))
}

/// Zero counts of `φ`, `φ'`, `Q` and `Q₁`, all with multiplicity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CountSummary {
    /// Nonreal zeros of `φ`.
    pub two_m: usize,
    /// Nonreal zeros of `φ'`.
    pub two_m1: usize,
    /// Real zeros of `Q`.
    pub zr_q: usize,
    /// Real zeros of `Q₁` (0 when `Q₁ ≡ 0`).
    pub zr_q1: usize,
    /// Real zeros of `φ'` not forced by Rolle's theorem.
    pub extra: usize,
    /// Distinct real zeros of `φ`.
    pub real_zeros: usize,
}

/// Everything exact about one function, computed once.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub function: LpStarFn,
    pub tower: DerivTower,
    pub pair: CriticalPair,
    /// Real zeros of `p`.
    pub p_roots: RootList,
    /// Real zeros of `P1` (polynomial part of `φ'`).
    pub p1_roots: RootList,
    /// Real zeros of the reduced numerator of `Q`.
    pub q_roots: RootList,
    /// Real zeros of the reduced numerator of `Q₁` (empty if `Q₁ ≡ 0`).
    pub q1_roots: RootList,
    pub summary: CountSummary,
}

impl Analysis {
    pub fn new(f: &LpStarFn) -> Result<Self> {
        let tower = f.tower();
        let pair = CriticalPair::new(&tower)?;
        let p_roots = isolate_roots(&tower.p0)?;
        let p1_roots = isolate_roots(&tower.p1)?;
        let q_roots = isolate_roots(&pair.q_num)?;
        let q1_roots = if pair.q1_is_zero() {
            RootList::default()
        } else {
            isolate_roots(&pair.q1_num)?
        };
        let deg = |q: &Poly| q.degree_or_zero();
        let nonreal = |q: &Poly, r: &RootList| -> Result<usize> {
            let n = deg(q).checked_sub(r.total()).filter(|n| n % 2 == 0);
            n.ok_or_else(|| Error::Invariant(format!("odd nonreal count for {q}")))
        };
        let two_m = nonreal(&tower.p0, &p_roots)?;
        let two_m1 = nonreal(&tower.p1, &p1_roots)?;
        let multiple: usize = p_roots.iter().map(|(_, m)| m - 1).sum();
        let gaps = p_roots.len().saturating_sub(1);
        let extra = p1_roots
            .total()
            .checked_sub(multiple + gaps)
            .ok_or_else(|| Error::Invariant("φ' has fewer real zeros than Rolle forces".into()))?;
        let summary = CountSummary {
            two_m,
            two_m1,
            zr_q: q_roots.total(),
            zr_q1: q1_roots.total(),
            extra,
            real_zeros: p_roots.len(),
        };
        Ok(Analysis {
            function: f.clone(),
            tower,
            pair,
            p_roots,
            p1_roots,
            q_roots,
            q1_roots,
            summary,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn poly(c: &[i64]) -> Poly {
        Poly::from_i64(c)
    }

    #[test]
    fn tower_examples() {
        let t = LpStarFn::polynomial(poly(&[1, 0, 1])).unwrap().tower();
        assert_eq!((t.p1, t.p2, t.p3), (poly(&[0, 2]), poly(&[2]), Poly::zero()));
        let t = LpStarFn::new(poly(&[1]), int(1), int(0)).unwrap().tower();
        assert_eq!(t.p1, poly(&[0, -2]));
        assert_eq!(t.p2, poly(&[-2, 0, 4]));
        assert_eq!(t.p3, poly(&[0, 12, 0, -8]));
        let t = LpStarFn::new(poly(&[0, 1]), int(0), int(1)).unwrap().tower();
        assert_eq!((t.p1, t.p2, t.p3), (poly(&[1, 1]), poly(&[2, 1]), poly(&[3, 1])));
    }

    #[test]
    fn excluded_forms() {
        assert_eq!(LpStarFn::polynomial(poly(&[3])), Err(Error::ExcludedForm));
        assert_eq!(LpStarFn::new(poly(&[3]), int(0), int(2)), Err(Error::ExcludedForm));
        assert_eq!(
            LpStarFn::new(poly(&[0, 1]), int(-1), int(0)),
            Err(Error::NegativeGaussian)
        );
        assert_eq!(LpStarFn::polynomial(Poly::zero()), Err(Error::ZeroPolynomial));
        assert!(LpStarFn::new(poly(&[3]), int(1), int(0)).is_ok());
    }

    #[test]
    fn critical_pair_of_z2_plus_1() {
        let t = LpStarFn::polynomial(poly(&[1, 0, 1])).unwrap().tower();
        let c = CriticalPair::new(&t).unwrap();
        assert_eq!(c.nf, poly(&[2, 0, -2]));
        assert_eq!(c.q_num, poly(&[2, 0, -2]));
        assert_eq!(c.q_den, poly(&[1, 0, 2, 0, 1]));
    }

    #[test]
    fn reduction_cancels_real_double_zero() {
        // p = z²(z²+1): NF = −2z²(2z⁴+z²+1), Qnum = −2(2z⁴+z²+1).
        let f = LpStarFn::polynomial(poly(&[0, 0, 1, 0, 1])).unwrap();
        let c = CriticalPair::new(&f.tower()).unwrap();
        assert_eq!(c.nf, poly(&[0, 0, -2, 0, -2, 0, -4]));
        assert_eq!(c.q_num, poly(&[-2, 0, -2, 0, -4]));
        let s = f.count_summary().unwrap();
        assert_eq!((s.two_m, s.two_m1, s.zr_q, s.extra), (2, 2, 0, 0));
    }

    #[test]
    fn summary_of_z2_plus_1() {
        let s = LpStarFn::polynomial(poly(&[1, 0, 1])).unwrap().count_summary().unwrap();
        assert_eq!((s.two_m, s.two_m1, s.zr_q, s.zr_q1, s.extra), (2, 0, 2, 0, 1));
    }

    #[test]
    fn linear_polynomial_has_vanishing_q1() {
        let a = LpStarFn::polynomial(poly(&[1, 2])).unwrap().analyze().unwrap();
        assert!(a.pair.q1_is_zero());
        assert_eq!(a.summary.zr_q1, 0);
    }

    #[test]
    fn shift_keeps_q() {
        let f = LpStarFn::polynomial(poly(&[1, 0, 1])).unwrap();
        let g = f.shift_by_rational(&int(1));
        assert_eq!(g.b(), &int(-1));
        let qa = CriticalPair::new(&f.tower()).unwrap();
        let qb = CriticalPair::new(&g.tower()).unwrap();
        assert_eq!((qa.q_num, qa.q_den), (qb.q_num, qb.q_den));
        assert_eq!(f.shift_by_rational(&int(0)), f);
    }

    #[test]
    fn display_form() {
        let f = LpStarFn::new(poly(&[1, 0, 1]), int(1), int(3)).unwrap();
        assert_eq!(f.to_string(), "(z^2 + 1)*exp(-z^2 + 3*z)");
        assert_eq!(LpStarFn::polynomial(poly(&[1, 0, 1])).unwrap().to_string(), "z^2 + 1");
    }
}
