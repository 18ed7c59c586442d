//! All real zeros of `φ`, `φ'`, `φ''`, `Q` and `Q₁` merged into one ordered list.

use std::cmp::Ordering;

use hawaii_core::poly::Poly;
use hawaii_core::rational::{self, int, Rational};
use hawaii_core::realroots::{compare, isolate_roots};
use hawaii_core::{AlgebraicNumber, Analysis, Result};

/// The functions whose real zeros make up the landscape.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Curve {
    /// `φ`, through `p`.
    Phi = 0,
    /// `φ'`, through `P1`.
    Deriv = 1,
    /// `φ''`, through `P2`.
    Second = 2,
    /// `Q`, through its reduced numerator.
    Q = 3,
    /// `Q₁`, through its reduced numerator.
    Q1 = 4,
}

/// One distinct real point and the multiplicity of each curve there.
#[derive(Clone, Debug)]
pub struct Point {
    pub x: AlgebraicNumber,
    pub mult: [usize; 5],
}

impl Point {
    pub fn has(&self, c: Curve) -> bool {
        self.mult[c as usize] > 0
    }

    pub fn m(&self, c: Curve) -> usize {
        self.mult[c as usize]
    }
}

/// End of a range of landscape points.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum End {
    NegInf,
    PosInf,
    /// The point with this index, excluded.
    Open(usize),
    /// The point with this index, included.
    Closed(usize),
}

/// Merged zeros with a rational sample inside every gap between them.
#[derive(Clone, Debug)]
pub struct Landscape {
    pub points: Vec<Point>,
    /// `samples[i]` lies strictly below `points[i]` and above `points[i − 1]`;
    /// the last sample lies above every point.
    pub samples: Vec<Rational>,
    /// `φ'' ≡ 0`.
    pub second_vanishes: bool,
    /// `Q₁ ≡ 0`.
    pub q1_vanishes: bool,
}

impl Landscape {
    pub fn new(an: &Analysis) -> Result<Self> {
        let second_vanishes = an.tower.p2.is_zero();
        let p2_roots = if second_vanishes {
            Vec::new()
        } else {
            isolate_roots(&an.tower.p2)?.into_roots()
        };
        let mut all: Vec<(AlgebraicNumber, Curve, usize)> = Vec::new();
        let lists = [
            (an.p_roots.roots(), Curve::Phi),
            (an.p1_roots.roots(), Curve::Deriv),
            (&p2_roots[..], Curve::Second),
            (an.q_roots.roots(), Curve::Q),
            (an.q1_roots.roots(), Curve::Q1),
        ];
        for (roots, c) in lists {
            all.extend(roots.iter().map(|(x, m)| (x.clone(), c, *m)));
        }
        all.sort_by(|a, b| compare(&a.0, &b.0));
        let mut points: Vec<Point> = Vec::new();
        for (x, c, m) in all {
            match points.last_mut() {
                Some(p) if compare(&p.x, &x) == Ordering::Equal => p.mult[c as usize] += m,
                _ => {
                    let mut mult = [0; 5];
                    mult[c as usize] = m;
                    points.push(Point { x, mult });
                }
            }
        }
        let samples = gap_samples(&mut points);
        Ok(Landscape {
            points,
            samples,
            second_vanishes,
            q1_vanishes: an.pair.q1_is_zero(),
        })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn point(&self, i: usize) -> &Point {
        &self.points[i]
    }

    /// Indices of the points where `c` vanishes, increasing.
    pub fn zeros_of(&self, c: Curve) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.points[i].has(c)).collect()
    }

    /// Zeros of `c` with multiplicity in the range from `lo` to `hi`.
    pub fn count(&self, c: Curve, lo: End, hi: End) -> usize {
        let (start, end) = self.span(lo, hi);
        (start..end).map(|i| self.points[i].m(c)).sum()
    }

    /// True when none of `curves` vanishes in the range.
    pub fn free_of(&self, curves: &[Curve], lo: End, hi: End) -> bool {
        curves.iter().all(|&c| self.count(c, lo, hi) == 0)
    }

    fn span(&self, lo: End, hi: End) -> (usize, usize) {
        let start = match lo {
            End::NegInf => 0,
            End::PosInf => self.len(),
            End::Open(i) => i + 1,
            End::Closed(i) => i,
        };
        let end = match hi {
            End::NegInf => 0,
            End::PosInf => self.len(),
            End::Open(i) => i,
            End::Closed(i) => i + 1,
        };
        (start, end.max(start))
    }

    /// Sign of `f` on the gap just below point `i` (or above every point when `i == len`).
    pub fn sign_below(&self, f: &Poly, i: usize) -> i8 {
        f.sign_at(&self.samples[i])
    }

    /// Sign of `f` on the gap just above the end `lo` of a range.
    pub fn sign_after(&self, f: &Poly, lo: End) -> i8 {
        match lo {
            End::NegInf => self.sign_below(f, 0),
            End::Open(i) | End::Closed(i) => self.sign_below(f, i + 1),
            End::PosInf => self.sign_below(f, self.len()),
        }
    }

    /// Short human-readable form of an end, for witnesses.
    pub fn describe(&self, e: End) -> String {
        match e {
            End::NegInf => "-inf".into(),
            End::PosInf => "+inf".into(),
            End::Open(i) | End::Closed(i) => format!("{:.9}", self.points[i].x.to_f64()),
        }
    }

    /// `(lo, hi)` with brackets matching the ends.
    pub fn describe_range(&self, lo: End, hi: End) -> String {
        let l = if matches!(lo, End::Closed(_)) { '[' } else { '(' };
        let r = if matches!(hi, End::Closed(_)) { ']' } else { ')' };
        format!("{l}{}, {}{r}", self.describe(lo), self.describe(hi))
    }
}

/// Rational samples strictly inside each gap, refining neighbours until they separate.
fn gap_samples(points: &mut [Point]) -> Vec<Rational> {
    let n = points.len();
    let mut out = Vec::with_capacity(n + 1);
    if n == 0 {
        out.push(Rational::from_integer(0.into()));
        return out;
    }
    out.push(points[0].x.lo().floor() - int(1));
    for i in 1..n {
        let (left, right) = points.split_at_mut(i);
        let (a, b) = (&mut left[i - 1].x, &mut right[0].x);
        while a.hi() >= b.lo() {
            a.refine_once();
            b.refine_once();
        }
        let s = rational::simplest_in(a.hi(), b.lo());
        let touches = (a.as_rational() == Some(&s)) || (b.as_rational() == Some(&s));
        out.push(if touches { (a.hi() + b.lo()) / int(2) } else { s });
    }
    out.push(points[n - 1].x.hi().ceil() + int(1));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use hawaii_core::LpStarFn;

    fn land(coeffs: &[i64]) -> Landscape {
        let f = LpStarFn::polynomial(Poly::from_i64(coeffs)).unwrap();
        Landscape::new(&f.analyze().unwrap()).unwrap()
    }

    #[test]
    fn z2_plus_1() {
        // φ' = 2z, φ'' = 2, Q zeros ±1.
        let l = land(&[1, 0, 1]);
        assert_eq!(l.len(), 3);
        assert_eq!(l.count(Curve::Q, End::NegInf, End::PosInf), 2);
        assert_eq!(l.count(Curve::Deriv, End::NegInf, End::PosInf), 1);
        assert!(!l.second_vanishes && !l.q1_vanishes);
        assert_eq!(l.count(Curve::Q, End::Open(0), End::PosInf), 1);
        assert_eq!(l.count(Curve::Q, End::Closed(0), End::Open(2)), 1);
        assert_eq!(l.count(Curve::Q, End::Closed(0), End::Closed(2)), 2);
    }

    #[test]
    fn samples_separate_points() {
        let l = land(&[0, -1, 0, 1]);
        for i in 0..l.len() {
            let x = l.point(i).x.to_f64();
            assert!(rational::to_f64(&l.samples[i]) < x);
            assert!(rational::to_f64(&l.samples[i + 1]) > x);
        }
    }

    #[test]
    fn coincident_zeros_merge() {
        // z²(z − 1): 0 is a zero of φ and φ'.
        let l = land(&[0, 0, -1, 1]);
        let zero = l.points.iter().find(|p| p.x.as_rational() == Some(&int(0))).unwrap();
        assert_eq!(zero.m(Curve::Phi), 2);
        assert_eq!(zero.m(Curve::Deriv), 1);
    }

    #[test]
    fn linear_has_vanishing_second() {
        let l = land(&[1, 1]);
        assert!(l.second_vanishes && l.q1_vanishes);
    }
}
