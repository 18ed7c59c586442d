//! Targeted families: a real-rooted polynomial plus a constant, functions whose
//! real zeros are all multiple, and round trips through the exponential shift.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use hawaii_core::hawaii::{compute_shift_for, type_bound, verify_theorem2, PropertyAVerdict};
use hawaii_core::rational::{int, rat};
use hawaii_core::{LpStarFn, Poly, Rational, Result};

use crate::generate::instance_seed;
use crate::ledger::{ledger_for, LedgerEntry};

/// Outcome of one scenario family.
#[derive(Clone, Debug, Default, Serialize, PartialEq, Eq)]
pub struct FamilyTally {
    pub instances: usize,
    pub passed: usize,
    /// First failures, as `function: reason`.
    pub failures: Vec<String>,
}

impl FamilyTally {
    fn record(&mut self, f: &LpStarFn, outcome: Result<Option<String>>) {
        self.instances += 1;
        let failure = match outcome {
            Ok(None) => {
                self.passed += 1;
                return;
            }
            Ok(Some(reason)) => reason,
            Err(e) => format!("error: {e}"),
        };
        if self.failures.len() < 10 {
            self.failures.push(format!("{f}: {failure}"));
        }
    }

    pub fn all_pass(&self) -> bool {
        self.passed == self.instances
    }
}

/// Results of [`run_scenarios`].
#[derive(Clone, Debug, Default, Serialize, PartialEq, Eq)]
pub struct ScenarioSummary {
    /// `p = f + c` with `f` real-rooted with simple zeros: `Z(Q) = 2m`.
    pub constant_offset: FamilyTally,
    /// Every real zero multiple: both two-sided bounds without property A.
    pub multiple_zeros: FamilyTally,
    /// The shift succeeds, and when `σ*` is rational the ledger passes on `ψ*`.
    pub shift_round_trip: FamilyTally,
    /// Round trips where `σ*` was rational and the ledger ran on `ψ*`.
    pub rational_shifts: usize,
}

impl ScenarioSummary {
    pub fn all_pass(&self) -> bool {
        self.constant_offset.all_pass() && self.multiple_zeros.all_pass() && self.shift_round_trip.all_pass()
    }
}

/// Runs `count` instances of each family.
pub fn run_scenarios(seed: u64, count: usize) -> ScenarioSummary {
    let mut s = ScenarioSummary::default();
    for i in 0..count {
        let mut rng = ChaCha8Rng::seed_from_u64(instance_seed(seed, i as u64));
        let f = constant_offset_instance(&mut rng);
        s.constant_offset.record(&f, check_constant_offset(&f));
        let f = multiple_zeros_instance(&mut rng);
        s.multiple_zeros.record(&f, check_multiple_zeros(&f));
        let f = if i % 2 == 0 {
            rational_shift_instance(&mut rng)
        } else {
            constant_offset_instance(&mut rng)
        };
        let outcome = check_shift_round_trip(&f);
        if let Ok((_, true)) = outcome {
            s.rational_shifts += 1;
        }
        s.shift_round_trip.record(&f, outcome.map(|(r, _)| r));
    }
    s
}

/// Distinct rational zeros `n/d`, `|n| ≤ 4·count`, `d ≤ 3`.
fn distinct_rationals(rng: &mut impl Rng, count: usize) -> Vec<Rational> {
    let h = 4 * count as i64;
    let mut out: Vec<Rational> = Vec::new();
    while out.len() < count {
        let r = rat(rng.gen_range(-h..=h), rng.gen_range(1..=3));
        if !out.contains(&r) {
            out.push(r);
        }
    }
    out
}

fn product_of_roots(roots: &[Rational]) -> Poly {
    roots.iter().fold(Poly::one(), |acc, r| &acc * &Poly::linear_root(r))
}

/// `f + c` for a real-rooted `f` with simple zeros and a constant `c ≠ 0` creating nonreal zeros.
pub fn constant_offset_instance(rng: &mut impl Rng) -> LpStarFn {
    loop {
        let n = rng.gen_range(2..=8);
        let f = product_of_roots(&distinct_rationals(rng, n));
        for _ in 0..20 {
            let c = rat(rng.gen_range(1..=50), rng.gen_range(1..=4)) * int(if rng.gen_bool(0.5) { 1 } else { -1 });
            let p = &f + &Poly::constant(c);
            let Ok(g) = LpStarFn::polynomial(p) else { continue };
            if g.count_summary().is_ok_and(|s| s.two_m > 0) {
                return g;
            }
        }
    }
}

fn check_constant_offset(f: &LpStarFn) -> Result<Option<String>> {
    let s = f.count_summary()?;
    Ok((s.zr_q != s.two_m).then(|| format!("Z(Q) = {} but 2m = {}", s.zr_q, s.two_m)))
}

/// A function of random type whose real zeros all have multiplicity at least 2.
pub fn multiple_zeros_instance(rng: &mut impl Rng) -> LpStarFn {
    let n = rng.gen_range(1..=3);
    let roots = distinct_rationals(rng, n);
    let mut p = Poly::constant(int(rng.gen_range(1..=5)));
    for r in &roots {
        p = &p * &Poly::linear_root(r).pow(rng.gen_range(2..=3));
    }
    for _ in 0..rng.gen_range(0..=2) {
        let u = rat(rng.gen_range(-6..=6), rng.gen_range(1..=2));
        let w = rat(rng.gen_range(1..=9), rng.gen_range(1..=4));
        let q = Poly::new(vec![&u * &u + w, -(u * int(2)), Rational::one()]);
        p = &p * &q.pow(rng.gen_range(1..=2));
    }
    let (a, b) = match rng.gen_range(0..3) {
        0 => (Rational::zero(), Rational::zero()),
        1 => (
            Rational::zero(),
            rat(rng.gen_range(1..=6), rng.gen_range(1..=3)) * int(if rng.gen_bool(0.5) { 1 } else { -1 }),
        ),
        _ => (
            rat(rng.gen_range(1..=4), rng.gen_range(1..=3)),
            rat(rng.gen_range(-6..=6), rng.gen_range(1..=3)),
        ),
    };
    LpStarFn::new(p, a, b).expect("valid by construction")
}

fn check_multiple_zeros(f: &LpStarFn) -> Result<Option<String>> {
    let an = f.analyze()?;
    let s = an.summary;
    let pa = PropertyAVerdict::from_analysis(&an)?;
    let (_, t2) = verify_theorem2(&s, &pa);
    let tb = type_bound(f.kind(), &s);
    let (z, z1) = (s.zr_q as i64, s.zr_q1 as i64);
    for (name, lo) in [("two-sided", t2.lower), ("type", tb)] {
        if !(lo <= z && z <= lo + z1) {
            return Ok(Some(format!("{name} bound {lo} <= Z(Q) = {z} <= {} fails", lo + z1)));
        }
    }
    Ok(None)
}

/// `((z − u)² + v²)^k · exp(b z)`, for which the shift constant is rational.
pub fn rational_shift_instance(rng: &mut impl Rng) -> LpStarFn {
    let u = rat(rng.gen_range(-5..=5), rng.gen_range(1..=2));
    let v = rat(rng.gen_range(1..=4), rng.gen_range(1..=3));
    let q = Poly::new(vec![&u * &u + &v * &v, -(u * int(2)), Rational::one()]);
    let b = rat(rng.gen_range(-6..=6), rng.gen_range(1..=3));
    let mut p = q.pow(rng.gen_range(1..=3));
    if rng.gen_bool(0.5) {
        let r = rat(rng.gen_range(-8..=8), 1);
        p = &p * &Poly::linear_root(&r);
    }
    LpStarFn::new(p, Rational::zero(), b).expect("valid by construction")
}

/// `(failure, ledger ran on ψ*)`.
fn check_shift_round_trip(f: &LpStarFn) -> Result<(Option<String>, bool)> {
    let an = f.analyze()?;
    if an.summary.zr_q == 0 {
        return Ok((None, false));
    }
    let r = compute_shift_for(&an)?;
    if !(r.property_a_after && r.signs_ok && r.zc_psi_prime < r.zc_phi) {
        let msg = format!(
            "shift: property A after {}, signs ok {}, Zc(psi') = {}, Zc(phi) = {}",
            r.property_a_after, r.signs_ok, r.zc_psi_prime, r.zc_phi
        );
        return Ok((Some(msg), false));
    }
    let Some(sigma) = r.sigma_star.as_rational() else {
        return Ok((None, false));
    };
    let psi = f.shift_by_rational(sigma);
    let an_psi = psi.analyze()?;
    let entries: Vec<LedgerEntry> = ledger_for(&an_psi)?;
    let failed: Vec<&str> = entries.iter().filter(|e| e.verdict.is_fail()).map(|e| e.name).collect();
    let pa = PropertyAVerdict::from_analysis(&an_psi)?;
    let msg = if !failed.is_empty() {
        Some(format!("ledger on psi* fails: {}", failed.join(", ")))
    } else if !pa.overall {
        Some("psi* lacks property A".to_string())
    } else {
        None
    };
    Ok((msg, true))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_run_passes() {
        let s = run_scenarios(5, 12);
        assert!(s.all_pass(), "{s:?}");
        assert_eq!(s.constant_offset.instances, 12);
        assert!(s.rational_shifts > 0);
    }

    #[test]
    fn constant_offset_examples() {
        for (f, c) in [(vec![0, -3, 0, 1], 10), (vec![-1, 0, 1], 5)] {
            let p = &Poly::from_i64(&f) + &Poly::constant(int(c));
            let g = LpStarFn::polynomial(p).unwrap();
            let s = g.count_summary().unwrap();
            assert_eq!((s.two_m, s.zr_q), (2, 2));
        }
    }

    #[test]
    fn multiple_zero_example() {
        let p = &Poly::from_i64(&[1, -2, 1]) * &Poly::from_i64(&[1, 0, 1]);
        let f = LpStarFn::polynomial(p).unwrap();
        assert_eq!(check_multiple_zeros(&f).unwrap(), None);
    }
}
