//! Floating-point root oracle, independent of the exact engine.
//!
//! Companion-matrix eigenvalues (f64) seed Aberth iterations whose residuals
//! are evaluated exactly; inclusion disks `|z − zᵢ| ≤ n·|Wᵢ|` then decide which
//! approximations stand for a real root. A connected group of `k` disks holds
//! exactly `k` roots, so an isolated disk centred on the real axis holds one real root.

#![allow(dead_code)]

use hawaii_core::rational::{self, Rational};
use hawaii_core::Poly;
use nalgebra::{Complex, DMatrix, Schur};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Root separation below which the oracle is not trusted.
pub const MIN_SEPARATION: f64 = 1e-6;

type C = Complex<f64>;

/// Eigenvalues of the companion matrix of `p`, or `None` when coefficients leave the f64 range.
pub fn companion_roots(p: &Poly) -> Option<Vec<C>> {
    let c = p.coeffs();
    let n = c.len().checked_sub(1)?;
    if n == 0 {
        return Some(Vec::new());
    }
    let lead = &c[n];
    let monic: Vec<f64> = c.iter().map(|x| rational::to_f64(&(x / lead))).collect();
    if monic.iter().any(|x| !x.is_finite()) {
        return None;
    }
    let mut m = DMatrix::<f64>::zeros(n, n);
    for i in 1..n {
        m[(i, i - 1)] = 1.0;
    }
    for i in 0..n {
        m[(i, n - 1)] = -monic[i];
    }
    let eig = Schur::try_new(m, f64::EPSILON, 10_000)?.complex_eigenvalues();
    if eig.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return None;
    }
    Some(eig.iter().copied().collect())
}

/// `p(z)` and `p'(z)` evaluated exactly at the f64 point `z`, then rounded.
fn exact_eval(p: &Poly, z: C) -> Option<(C, C)> {
    let x = Rational::from_float(z.re)?;
    let y = Rational::from_float(z.im)?;
    // Both denominators are powers of two, so the larger is a common one.
    let d = x.denom().max(y.denom()).clone();
    let (zx, zy) = ((&x * &d).to_integer(), (&y * &d).to_integer());
    let l = p.coeffs().iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let horner = |coeffs: &mut dyn Iterator<Item = BigInt>| {
        let (mut re, mut im, mut scale) = (BigInt::zero(), BigInt::zero(), BigInt::one());
        for c in coeffs {
            let r = &re * &zx - &im * &zy + &c * &scale;
            im = &re * &zy + &im * &zx;
            re = r;
            scale *= &d;
        }
        let den = &l * &scale / &d;
        let f = |v: BigInt| rational::to_f64(&Rational::new(v, den.clone()));
        C::new(f(re), f(im))
    };
    let ints: Vec<BigInt> = p.coeffs().iter().map(|c| (c * &l).to_integer()).collect();
    let v = horner(&mut ints.iter().rev().cloned());
    let dv = horner(&mut ints.iter().enumerate().skip(1).rev().map(|(i, c)| c * BigInt::from(i)));
    Some((v, dv))
}

/// Weierstrass corrections `p(zᵢ) / (lc·∏_{j≠i}(zᵢ − zⱼ))`.
fn corrections(p: &Poly, lead: f64, zs: &[C]) -> Option<Vec<C>> {
    let mut out = Vec::with_capacity(zs.len());
    for (i, &zi) in zs.iter().enumerate() {
        let mut d = C::new(lead, 0.0);
        for (j, &zj) in zs.iter().enumerate() {
            if i != j {
                d *= zi - zj;
            }
        }
        let w = exact_eval(p, zi)?.0 / d;
        if !w.re.is_finite() || !w.im.is_finite() {
            return None;
        }
        out.push(w);
    }
    Some(out)
}

/// Points on a circle enclosing every root, for when the eigenvalue solver stalls.
fn circle_start(p: &Poly) -> Option<Vec<C>> {
    let c = p.coeffs();
    let n = c.len().checked_sub(1)?;
    let lead = rational::to_f64(&c[n]).abs();
    let radius = (0..n)
        .map(|i| (rational::to_f64(&c[i]).abs() / lead).powf(1.0 / (n - i) as f64))
        .fold(0.0, f64::max)
        * 2.0;
    if !radius.is_finite() {
        return None;
    }
    Some(
        (0..n)
            .map(|k| C::from_polar(radius.max(1.0), 0.4 + std::f64::consts::TAU * k as f64 / n as f64))
            .collect(),
    )
}

/// Approximations after at most `iterations` Aberth steps from the companion eigenvalues.
pub fn polished_roots(p: &Poly, iterations: usize) -> Option<Vec<C>> {
    let mut zs = companion_roots(p).or_else(|| circle_start(p))?;
    for _ in 0..iterations {
        let mut small = true;
        for i in 0..zs.len() {
            let (v, dv) = exact_eval(p, zs[i])?;
            if v == C::new(0.0, 0.0) {
                continue;
            }
            let newton = v / dv;
            let repulsion: C = (0..zs.len()).filter(|&j| j != i).map(|j| (zs[i] - zs[j]).inv()).sum();
            let step = newton / (C::new(1.0, 0.0) - newton * repulsion);
            if !step.re.is_finite() || !step.im.is_finite() {
                return Some(zs);
            }
            zs[i] -= step;
            small &= step.norm() <= 1e-15 * zs[i].norm().max(1.0);
        }
        if small {
            break;
        }
    }
    Some(zs)
}

/// Smallest distance between two roots (infinite for fewer than two).
pub fn min_separation(roots: &[C]) -> f64 {
    let mut best = f64::INFINITY;
    for i in 0..roots.len() {
        for j in i + 1..roots.len() {
            best = best.min((roots[i] - roots[j]).norm());
        }
    }
    best
}

/// What the oracle says about the real zeros of one polynomial.
#[derive(Debug, Clone, PartialEq)]
pub enum OracleCount {
    Counted(usize),
    /// Roots closer than [`MIN_SEPARATION`], typically a multiple root.
    Clustered,
    /// Overlapping inclusion disks or f64 overflow despite well-separated approximations.
    Unresolved,
}

/// Real roots from inclusion disks around polished approximations.
pub fn real_root_count_with(p: &Poly, iterations: usize) -> OracleCount {
    let Some(mut zs) = polished_roots(p, iterations) else {
        return OracleCount::Unresolved;
    };
    let n = zs.len();
    if n == 0 {
        return OracleCount::Counted(0);
    }
    if min_separation(&zs) <= MIN_SEPARATION {
        return OracleCount::Clustered;
    }
    let Some(lead) = p.coeffs().last().map(rational::to_f64) else {
        return OracleCount::Unresolved;
    };
    let Some(w) = corrections(p, lead, &zs) else {
        return OracleCount::Unresolved;
    };
    // Centre near-real disks on the axis so that an isolated one is symmetric.
    for (z, w) in zs.iter_mut().zip(&w) {
        if z.im.abs() <= 2.0 * n as f64 * w.norm() {
            z.im = 0.0;
        }
    }
    let Some(w) = corrections(p, lead, &zs) else {
        return OracleCount::Unresolved;
    };
    // Factor 2 covers rounding in the f64 products.
    let radius: Vec<f64> = w.iter().map(|w| 2.0 * n as f64 * w.norm()).collect();
    let mut real = 0;
    for i in 0..n {
        let isolated = (0..n).all(|j| j == i || (zs[i] - zs[j]).norm() > radius[i] + radius[j]);
        if !isolated {
            return OracleCount::Unresolved;
        }
        if zs[i].im == 0.0 {
            real += 1;
        } else if zs[i].im.abs() <= radius[i] {
            return OracleCount::Unresolved;
        }
    }
    OracleCount::Counted(real)
}

pub fn real_root_count(p: &Poly) -> OracleCount {
    real_root_count_with(p, 60)
}

/// Outcome of comparing one exact count with the oracle.
#[derive(Debug, Clone, PartialEq)]
pub enum Agreement {
    Agree,
    /// The first oracle pass disagreed; more polishing confirmed the exact count.
    ResolvedForEngine,
    Disagree {
        engine: usize,
        oracle: OracleCount,
    },
    Clustered,
    Unresolved,
    /// The polynomial vanishes identically; there is no count to compare.
    Vanishes,
}

pub fn compare_count(p: &Poly, engine: usize) -> Agreement {
    if p.is_zero() {
        return Agreement::Vanishes;
    }
    match real_root_count(p) {
        OracleCount::Clustered => Agreement::Clustered,
        OracleCount::Unresolved => Agreement::Unresolved,
        OracleCount::Counted(n) if n == engine => Agreement::Agree,
        OracleCount::Counted(_) => match real_root_count_with(p, 500) {
            OracleCount::Counted(n) if n == engine => Agreement::ResolvedForEngine,
            other => Agreement::Disagree { engine, oracle: other },
        },
    }
}

/// Quick self-checks on hand-made polynomials.
pub fn self_check() {
    assert_eq!(real_root_count(&Poly::from_i64(&[-2, 0, 1])), OracleCount::Counted(2));
    assert_eq!(real_root_count(&Poly::from_i64(&[1, 0, 1])), OracleCount::Counted(0));
    assert_eq!(real_root_count(&Poly::from_i64(&[1, -2, 1])), OracleCount::Clustered);
    assert_eq!(
        real_root_count(&Poly::from_i64(&[0, -1, 0, 1])),
        OracleCount::Counted(3)
    );
}
