//! The exponential shift `ψ* = exp(−σ* z)·φ` with `σ* = max φ'(ζ)/φ(ζ)` over
//! the real zeros `ζ` of `Q`.

use std::cmp::Ordering;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lpstar::{Analysis, FnKind, LpStarFn};
use crate::poly::{resultant_sigma, squarefree_part, Poly};
use crate::rational::{self, Rational};
use crate::realroots::{compare_mut, sign_at_mut, AlgebraicNumber, SigmaPoly, SturmChain};

/// One level of the iteration `ψ_{j+1} = exp(−σ_{j+1} z)·ψ_j'`, recorded while `σ_j` is rational.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceLevel {
    /// Nonreal zeros of `ψ_j`.
    pub two_m: usize,
    /// Real zeros of `Q[ψ_j]`.
    pub zr_q: usize,
    /// `σ_{j+1}` when it is rational.
    pub sigma: Option<Rational>,
}

/// Result of the shift construction.
#[derive(Clone, Debug)]
pub struct ShiftResult {
    /// `Q` has no real zeros; `σ* = 0` is used and nothing is asserted beyond property A.
    pub trivial: bool,
    pub sigma_star: AlgebraicNumber,
    /// A real zero of `Q` attaining the maximum.
    pub zeta_star: Option<AlgebraicNumber>,
    /// `b` of the original function; `ψ*` has exponent `−a z² + (b − σ*) z`.
    pub b: Rational,
    /// Square-free polynomial whose roots include every value `φ'(ζ)/φ(ζ)`.
    pub elimination: Poly,
    /// Each distinct real zero of `Q` with its value `φ'(ζ)/φ(ζ)`.
    pub values: Vec<(AlgebraicNumber, AlgebraicNumber)>,
    /// Number of zeros of `Q` attaining the maximum.
    pub ties: usize,
    /// `ψ*'(ζ)/ψ*(ζ) ≤ 0` at every real zero `ζ` of `Q`, zero exactly at the ties.
    pub signs_ok: bool,
    pub property_a_after: bool,
    /// Nonreal zeros of `φ` (and of `ψ*`).
    pub zc_phi: usize,
    /// Nonreal zeros of `ψ*'`.
    pub zc_psi_prime: usize,
    /// Polynomial part of `ψ*'` when `σ*` is rational.
    pub psi_prime_part: Option<Poly>,
    pub trace: Vec<TraceLevel>,
}

/// Shift construction for `f`.
pub fn compute_shift(f: &LpStarFn) -> Result<ShiftResult> {
    compute_shift_for(&f.analyze()?)
}

/// Shift construction from a finished analysis.
pub fn compute_shift_for(an: &Analysis) -> Result<ShiftResult> {
    let t = &an.tower;
    if an.q_roots.is_empty() {
        let sigma = AlgebraicNumber::rational(Rational::zero());
        let pa = super::PropertyAVerdict::from_analysis(an)?;
        return Ok(ShiftResult {
            trivial: true,
            sigma_star: sigma,
            zeta_star: None,
            b: an.function.b().clone(),
            elimination: Poly::one(),
            values: Vec::new(),
            ties: 0,
            signs_ok: true,
            property_a_after: pa.overall,
            zc_phi: an.summary.two_m,
            zc_psi_prime: an.summary.two_m1,
            psi_prime_part: Some(t.p1.clone()),
            trace: vec![TraceLevel {
                two_m: an.summary.two_m,
                zr_q: 0,
                sigma: None,
            }],
        });
    }

    // g(σ, z) = P1(z) − σ·P0(z), the polynomial part of ψ'.
    let g = sigma_linear(&t.p1, &t.p0);
    let neg_g: Vec<Poly> = g.iter().map(|c| -c).collect();
    let elim = resultant_sigma(&an.pair.q_num, &neg_g)?;
    let elimination = squarefree_part(&elim)?;
    let elim_chain = SturmChain::new(&elimination)?;

    let mut values = Vec::with_capacity(an.q_roots.len());
    for (zeta, _) in an.q_roots.iter() {
        let mut zeta = zeta.clone();
        let v = value_at(an, &elimination, &elim_chain, &mut zeta);
        values.push((zeta, v));
    }

    let mut best = 0;
    for i in 1..values.len() {
        let (l, r) = values.split_at_mut(i);
        if compare_mut(&mut r[0].1, &mut l[best].1) == Ordering::Greater {
            best = i;
        }
    }
    let sigma_star = values[best].1.clone();
    let zeta_star = values[best].0.clone();

    let mut ties = 0;
    let mut is_tie = Vec::with_capacity(values.len());
    let mut signs_ok = true;
    for (zeta, v) in values.iter_mut() {
        let mut s = sigma_star.clone();
        let tie = compare_mut(v, &mut s) == Ordering::Equal;
        ties += usize::from(tie);
        is_tie.push(tie);
        let sign = shifted_sign(t, zeta, &mut s, tie);
        signs_ok &= if tie { sign == 0 } else { sign < 0 };
    }
    if !signs_ok {
        return Err(Error::Invariant(format!(
            "ψ*'/ψ* is positive at a zero of Q for {}",
            an.function
        )));
    }

    let breaks = breakpoints(an, &mut values)?;
    let roots = locate_psi_prime_roots(an, &breaks, &mut values, &is_tie, &sigma_star);
    let zc_psi_prime = nonreal_psi_prime(an, &values, &roots, &sigma_star)?;
    let property_a_after = property_a_after(&breaks, &roots, &is_tie);

    let psi_prime_part = sigma_star.as_rational().map(|s| t.shifted_p1(s));
    let trace = trace_levels(an, sigma_star.as_rational())?;

    let result = ShiftResult {
        trivial: false,
        sigma_star,
        zeta_star: Some(zeta_star),
        b: an.function.b().clone(),
        elimination,
        values,
        ties,
        signs_ok,
        property_a_after,
        zc_phi: an.summary.two_m,
        zc_psi_prime,
        psi_prime_part,
        trace,
    };
    if !result.property_a_after {
        return Err(Error::Invariant(format!("ψ* lacks property A for {}", an.function)));
    }
    Ok(result)
}

/// `P1 − σ·P0` as a polynomial in `z` with coefficients in `ℚ[σ]`.
fn sigma_linear(p1: &Poly, p0: &Poly) -> SigmaPoly {
    let n = p1.coeffs().len().max(p0.coeffs().len());
    (0..n).map(|k| Poly::new(vec![p1.coeff(k), -p0.coeff(k)])).collect()
}

/// `P1(ζ)/P0(ζ)` as a root of the elimination polynomial.
fn value_at(an: &Analysis, elim: &Poly, chain: &SturmChain, zeta: &mut AlgebraicNumber) -> AlgebraicNumber {
    let t = &an.tower;
    loop {
        if let Some(z) = zeta.as_rational() {
            return AlgebraicNumber::rational(t.p1.eval(z) / t.p0.eval(z));
        }
        let iv = zeta.interval();
        if let Some(v) = t.p1.eval_interval(&iv).checked_div(&t.p0.eval_interval(&iv)) {
            let (lo, hi) = rational::round_outward(&v.lo, &v.hi);
            if chain.count_closed(&lo, &hi) == 1 {
                for end in [&lo, &hi] {
                    if elim.eval(end).is_zero() {
                        return AlgebraicNumber::rational(end.clone());
                    }
                }
                let mut x = AlgebraicNumber::new(elim.clone(), lo, hi)
                    .expect("single elimination root inside the value enclosure");
                x.detect_rational();
                return x;
            }
        }
        zeta.refine_once();
    }
}

/// Sign of `(P1 − σ·P0)·P0` at `ζ`; `tie` states that `φ'(ζ)/φ(ζ) = σ` exactly.
fn shifted_sign(
    t: &crate::lpstar::DerivTower,
    zeta: &mut AlgebraicNumber,
    sigma: &mut AlgebraicNumber,
    tie: bool,
) -> i8 {
    if tie {
        return 0;
    }
    let p1p0 = &t.p1 * &t.p0;
    let p0sq = &t.p0 * &t.p0;
    if let Some(s) = sigma.as_rational() {
        return sign_at_mut(&(&p1p0 - &p0sq.scale(s)), zeta);
    }
    loop {
        let iz = zeta.interval();
        let val = &p1p0.eval_interval(&iz) - &(&p0sq.eval_interval(&iz) * &sigma.interval());
        if let Some(s) = val.sign() {
            return s;
        }
        if zeta.width() >= sigma.width() {
            zeta.refine_once();
        } else {
            sigma.refine_once();
        }
    }
}

/// A point where `φ'/φ` may stop being monotone: a real zero of `Q`
/// (index into the values) or a real zero of `φ` (index into the root list).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Break {
    Zeta(usize),
    Pole(usize),
}

/// One-sided limit of `φ'/φ` at a break or at `±∞`.
enum Level {
    NegInf,
    PosInf,
    At(AlgebraicNumber),
}

/// Zeros of `Q` and of `φ`, merged in increasing order.
fn breakpoints(an: &Analysis, values: &mut [(AlgebraicNumber, AlgebraicNumber)]) -> Result<Vec<Break>> {
    let mut poles: Vec<AlgebraicNumber> = an.p_roots.iter().map(|(x, _)| x.clone()).collect();
    let mut out = Vec::with_capacity(values.len() + poles.len());
    let (mut i, mut j) = (0, 0);
    while i < values.len() || j < poles.len() {
        let zeta_first = if i == values.len() {
            false
        } else if j == poles.len() {
            true
        } else {
            match compare_mut(&mut values[i].0, &mut poles[j]) {
                Ordering::Less => true,
                Ordering::Greater => false,
                Ordering::Equal => {
                    return Err(Error::Invariant("a zero of Q is a zero of φ".into()));
                }
            }
        };
        if zeta_first {
            out.push(Break::Zeta(i));
            i += 1;
        } else {
            out.push(Break::Pole(j));
            j += 1;
        }
    }
    Ok(out)
}

/// `φ'/φ` is `−∞` just left of a zero of `φ` and `+∞` just right of it
/// (residue = multiplicity > 0); at `±∞` it tends to `∓∞` when `a > 0`, else to `b`.
fn level(an: &Analysis, values: &[(AlgebraicNumber, AlgebraicNumber)], at: Option<Break>, right_side: bool) -> Level {
    match at {
        Some(Break::Zeta(i)) => Level::At(values[i].1.clone()),
        Some(Break::Pole(_)) => {
            if right_side {
                Level::PosInf
            } else {
                Level::NegInf
            }
        }
        None if an.function.kind() == FnKind::Gaussian => {
            // right_side = true means the left end of the line, −∞, where −2az → +∞.
            if right_side {
                Level::PosInf
            } else {
                Level::NegInf
            }
        }
        None => Level::At(AlgebraicNumber::rational(an.function.b().clone())),
    }
}

fn below(x: &Level, s: &mut AlgebraicNumber) -> bool {
    match x {
        Level::NegInf => true,
        Level::PosInf => false,
        Level::At(v) => compare_mut(&mut v.clone(), s) == Ordering::Less,
    }
}

fn above(x: &Level, s: &mut AlgebraicNumber) -> bool {
    match x {
        Level::NegInf => false,
        Level::PosInf => true,
        Level::At(v) => compare_mut(&mut v.clone(), s) == Ordering::Greater,
    }
}

/// Where the real zeros of `ψ*'` sit relative to the breaks.
struct PsiRoots {
    /// Piece `k` is the open interval between breaks `k − 1` and `k` (`±∞` at the ends).
    in_piece: Vec<bool>,
    /// Break `k` is itself a zero of `ψ*'`: a tied zero of `Q` or a multiple zero of `φ`.
    at_break: Vec<bool>,
}

/// Zeros of `ψ*' = exp(..)·(P1 − σ*P0)`: `φ'/φ` is strictly monotone between
/// breaks, so each piece holds one simple zero exactly when `σ*` lies strictly
/// between the piece's end limits.
fn locate_psi_prime_roots(
    an: &Analysis,
    breaks: &[Break],
    values: &mut [(AlgebraicNumber, AlgebraicNumber)],
    is_tie: &[bool],
    sigma: &AlgebraicNumber,
) -> PsiRoots {
    let mut s = sigma.clone();
    let n = breaks.len();
    let mut in_piece = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let lo = level(an, values, k.checked_sub(1).map(|i| breaks[i]), true);
        let hi = level(an, values, breaks.get(k).copied(), false);
        let hit = (below(&lo, &mut s) && above(&hi, &mut s)) || (above(&lo, &mut s) && below(&hi, &mut s));
        in_piece.push(hit);
    }
    let at_break = breaks
        .iter()
        .map(|b| match *b {
            Break::Zeta(i) => is_tie[i],
            Break::Pole(j) => an.p_roots.roots()[j].1 > 1,
        })
        .collect();
    PsiRoots { in_piece, at_break }
}

/// `deg(P1 − σ*P0)` minus its real zeros counted with multiplicity.
fn nonreal_psi_prime(
    an: &Analysis,
    values: &[(AlgebraicNumber, AlgebraicNumber)],
    roots: &PsiRoots,
    sigma: &AlgebraicNumber,
) -> Result<usize> {
    let f = &an.function;
    let deg_p = an.tower.p0.degree_or_zero();
    let deg = if f.kind() == FnKind::Gaussian {
        deg_p + 1
    } else if sigma.as_rational() == Some(f.b()) {
        deg_p - 1
    } else {
        deg_p
    };
    let simple = roots.in_piece.iter().filter(|&&h| h).count();
    let tied: usize = an
        .q_roots
        .iter()
        .zip(values)
        .filter(|((_, _), (_, v))| compare_mut(&mut v.clone(), &mut sigma.clone()) == Ordering::Equal)
        .map(|((_, m), _)| 1 + m)
        .sum();
    let at_poles: usize = an.p_roots.iter().map(|(_, m)| m - 1).sum();
    deg.checked_sub(simple + tied + at_poles)
        .filter(|n| n % 2 == 0)
        .ok_or_else(|| Error::Invariant(format!("inconsistent zero count of ψ*' for {f}")))
}

/// Property A of `ψ*`: walk away from each zero of `φ` until the first zero of
/// `ψ*'`; the side is clear when no untied zero of `Q` was passed.
fn property_a_after(breaks: &[Break], roots: &PsiRoots, is_tie: &[bool]) -> bool {
    let clear = |order: &mut dyn Iterator<Item = (usize, usize)>| -> bool {
        // Items are (piece, break) pairs, walking outward.
        for (piece, brk) in order {
            if roots.in_piece[piece] {
                return true;
            }
            if brk == usize::MAX {
                return true;
            }
            if roots.at_break[brk] {
                return true;
            }
            if let Break::Zeta(i) = breaks[brk] {
                if !is_tie[i] {
                    return false;
                }
            }
        }
        true
    };
    let n = breaks.len();
    for (k, b) in breaks.iter().enumerate() {
        if !matches!(b, Break::Pole(_)) {
            continue;
        }
        // Left: piece k lies just below break k, then break k − 1, piece k − 1, ...
        let mut left = (0..=k).rev().map(|p| (p, p.checked_sub(1).unwrap_or(usize::MAX)));
        // Right: piece k + 1 lies just above break k, then break k + 1, ...
        let mut right = (k + 1..=n).map(|p| (p, if p < n { p } else { usize::MAX }));
        if !(clear(&mut left) || clear(&mut right)) {
            return false;
        }
    }
    true
}

/// `P1 − σ·P0` with `σ` symbolic, the polynomial part of `(exp(−σz)·φ)'`.
pub fn psi_prime_polynomial(an: &Analysis) -> SigmaPoly {
    sigma_linear(&an.tower.p1, &an.tower.p0)
}

/// Counts along `ψ₀ = φ`, `ψ_{j+1} = exp(−σ_{j+1} z)·ψ_j'` while every `σ_j` is rational.
fn trace_levels(an: &Analysis, sigma: Option<&Rational>) -> Result<Vec<TraceLevel>> {
    const MAX_DEPTH: usize = 64;
    let mut trace = vec![TraceLevel {
        two_m: an.summary.two_m,
        zr_q: an.summary.zr_q,
        sigma: sigma.cloned(),
    }];
    let mut next = sigma.cloned();
    let mut cur = an.function.clone();
    let mut tower = an.tower.clone();
    while let Some(s) = next.take() {
        if trace.len() >= MAX_DEPTH {
            break;
        }
        let p = tower.shifted_p1(&s);
        let Ok(psi) = LpStarFn::new(p, cur.a().clone(), cur.b() - &s) else {
            break;
        };
        let level = psi.analyze()?;
        let sigma = if level.summary.zr_q == 0 {
            None
        } else {
            let r = compute_level_sigma(&level)?;
            r.as_rational().cloned()
        };
        trace.push(TraceLevel {
            two_m: level.summary.two_m,
            zr_q: level.summary.zr_q,
            sigma: sigma.clone(),
        });
        next = sigma;
        tower = level.tower;
        cur = psi;
    }
    Ok(trace)
}

/// `σ` of one trace level, without the checks of the full construction.
fn compute_level_sigma(an: &Analysis) -> Result<AlgebraicNumber> {
    let t = &an.tower;
    let g = sigma_linear(&t.p1, &t.p0);
    let neg_g: Vec<Poly> = g.iter().map(|c| -c).collect();
    let elimination = squarefree_part(&resultant_sigma(&an.pair.q_num, &neg_g)?)?;
    let chain = SturmChain::new(&elimination)?;
    let mut best: Option<AlgebraicNumber> = None;
    for (zeta, _) in an.q_roots.iter() {
        let mut v = value_at(an, &elimination, &chain, &mut zeta.clone());
        best = match best {
            Some(mut b) => {
                if compare_mut(&mut b, &mut v) == Ordering::Less {
                    Some(v)
                } else {
                    Some(b)
                }
            }
            None => Some(v),
        };
    }
    best.ok_or_else(|| Error::Invariant("no zeros of Q".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn tight_case_z2_plus_1() {
        let f = LpStarFn::polynomial(Poly::from_i64(&[1, 0, 1])).unwrap();
        let s = compute_shift(&f).unwrap();
        assert!(!s.trivial);
        assert_eq!(s.sigma_star.as_rational(), Some(&int(1)));
        assert_eq!(s.zeta_star.unwrap().as_rational(), Some(&int(1)));
        assert_eq!(s.psi_prime_part, Some(Poly::from_i64(&[-1, 2, -1])));
        assert_eq!((s.zc_phi, s.zc_psi_prime), (2, 0));
        assert!(s.property_a_after && s.signs_ok);
    }

    #[test]
    fn no_q_zeros_is_trivial() {
        let f = LpStarFn::polynomial(Poly::from_i64(&[0, -1, 0, 1])).unwrap();
        let s = compute_shift(&f).unwrap();
        assert!(s.trivial && s.property_a_after);
        assert_eq!(s.sigma_star.as_rational(), Some(&int(0)));
    }
}
