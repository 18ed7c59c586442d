//! Random instances built from factored form, so the root structure is known up front.

use hawaii_core::rational::{int, rat};
use hawaii_core::{FnKind, LpStarFn, Poly, Rational};
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Shape of a generated instance.
///
/// Budgets count multiplicities: `real_root_budget` real zeros of `p` and
/// `nonreal_pair_budget` conjugate pairs, so `deg p = real + 2·pairs`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenProfile {
    pub kind: Kind,
    pub degree_max: usize,
    pub real_root_budget: usize,
    pub nonreal_pair_budget: usize,
    pub multiplicity_max: usize,
    pub coefficient_height: u32,
    pub seed: u64,
    /// Clustered roots, nearly real pairs and shared real parts.
    #[serde(default)]
    pub adversarial: bool,
}

/// Serializable mirror of [`FnKind`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    Polynomial,
    ExpLinear,
    Gaussian,
}

impl Kind {
    pub const ALL: [Kind; 3] = [Kind::Polynomial, Kind::ExpLinear, Kind::Gaussian];

    pub fn as_str(self) -> &'static str {
        self.fn_kind().as_str()
    }

    pub fn fn_kind(self) -> FnKind {
        match self {
            Kind::Polynomial => FnKind::Polynomial,
            Kind::ExpLinear => FnKind::ExpLinear,
            Kind::Gaussian => FnKind::Gaussian,
        }
    }

    pub fn parse(s: &str) -> Option<Kind> {
        Kind::ALL.into_iter().find(|k| k.as_str() == s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("infeasible profile: {0}")]
    InfeasibleProfile(String),
}

/// A generated function together with the factors it was built from.
#[derive(Clone, Debug)]
pub struct Generated {
    pub profile: GenProfile,
    pub function: LpStarFn,
    /// Distinct real zeros of `p` with multiplicities.
    pub real_roots: Vec<(Rational, usize)>,
    /// Irreducible factors `(z − u)² + w`, `w > 0`, as `(u, w, multiplicity)`.
    pub quadratics: Vec<(Rational, Rational, usize)>,
}

impl Generated {
    /// Nonreal zeros of `p` by construction.
    pub fn two_m(&self) -> usize {
        2 * self.quadratics.iter().map(|q| q.2).sum::<usize>()
    }

    /// Real zeros of `p` with multiplicity, by construction.
    pub fn real_total(&self) -> usize {
        self.real_roots.iter().map(|r| r.1).sum()
    }
}

/// Builds the instance described by `profile`; identical profiles give identical instances.
pub fn generate(profile: &GenProfile) -> Result<Generated, GenError> {
    check_feasible(profile)?;
    let mut rng = ChaCha8Rng::seed_from_u64(profile.seed);
    let h = profile.coefficient_height as i64;
    let real_mults = split_multiplicities(&mut rng, profile.real_root_budget, profile.multiplicity_max);
    let pair_mults = split_multiplicities(&mut rng, profile.nonreal_pair_budget, profile.multiplicity_max);

    let mut reals: Vec<Rational> = Vec::new();
    while reals.len() < real_mults.len() {
        let r = if profile.adversarial && !reals.is_empty() && rng.gen_bool(0.5) {
            let base = reals.choose(&mut rng).expect("nonempty").clone();
            base + rat(rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 }, 1000)
        } else {
            small_rational(&mut rng, h)
        };
        if !reals.contains(&r) {
            reals.push(r);
        }
    }
    let mut quads: Vec<(Rational, Rational)> = Vec::new();
    while quads.len() < pair_mults.len() {
        let u = if profile.adversarial && !reals.is_empty() && rng.gen_bool(0.5) {
            reals.choose(&mut rng).expect("nonempty").clone()
        } else {
            small_rational(&mut rng, h)
        };
        let w = if profile.adversarial && rng.gen_bool(0.5) {
            rat(1, 10i64.pow(rng.gen_range(2..=4)))
        } else {
            rat(rng.gen_range(1..=h), rng.gen_range(1..=3))
        };
        if !quads.contains(&(u.clone(), w.clone())) {
            quads.push((u, w));
        }
    }

    let lead = int(rng.gen_range(1..=h) * if rng.gen_bool(0.5) { 1 } else { -1 });
    let mut p = Poly::constant(lead);
    for (r, &m) in reals.iter().zip(&real_mults) {
        p = &p * &Poly::linear_root(r).pow(m);
    }
    for ((u, w), &m) in quads.iter().zip(&pair_mults) {
        let q = Poly::new(vec![u * u + w, -(u * int(2)), Rational::one()]);
        p = &p * &q.pow(m);
    }

    let (a, b) = match profile.kind {
        Kind::Polynomial => (Rational::zero(), Rational::zero()),
        Kind::ExpLinear => (Rational::zero(), nonzero_rational(&mut rng, h)),
        Kind::Gaussian => {
            let a = rat(rng.gen_range(1..=h), rng.gen_range(1..=3));
            let b = if rng.gen_bool(0.3) {
                Rational::zero()
            } else {
                nonzero_rational(&mut rng, h)
            };
            (a, b)
        }
    };
    let function = LpStarFn::new(p, a, b).map_err(|e| GenError::InfeasibleProfile(e.to_string()))?;
    let mut real_roots: Vec<(Rational, usize)> = reals.into_iter().zip(real_mults).collect();
    real_roots.sort();
    let quadratics = quads.into_iter().zip(pair_mults).map(|((u, w), m)| (u, w, m)).collect();
    Ok(Generated {
        profile: profile.clone(),
        function,
        real_roots,
        quadratics,
    })
}

fn check_feasible(p: &GenProfile) -> Result<(), GenError> {
    let deg = p.real_root_budget + 2 * p.nonreal_pair_budget;
    let fail = |m: String| Err(GenError::InfeasibleProfile(m));
    if p.multiplicity_max == 0 {
        return fail("multiplicity_max must be positive".into());
    }
    if p.coefficient_height == 0 {
        return fail("coefficient_height must be positive".into());
    }
    if deg > p.degree_max {
        return fail(format!("budgets need degree {deg} > degree_max {}", p.degree_max));
    }
    if deg == 0 && p.kind != Kind::Gaussian {
        return fail(format!(
            "a {} instance needs a nonconstant polynomial factor",
            p.kind.as_str()
        ));
    }
    Ok(())
}

/// Random composition of `total` into parts of size at most `max`.
fn split_multiplicities(rng: &mut impl Rng, mut total: usize, max: usize) -> Vec<usize> {
    let mut parts = Vec::new();
    while total > 0 {
        let m = rng.gen_range(1..=max.min(total));
        parts.push(m);
        total -= m;
    }
    parts
}

fn small_rational(rng: &mut impl Rng, h: i64) -> Rational {
    rat(rng.gen_range(-h..=h), rng.gen_range(1..=4))
}

fn nonzero_rational(rng: &mut impl Rng, h: i64) -> Rational {
    loop {
        let r = rat(rng.gen_range(-h..=h), rng.gen_range(1..=3));
        if !r.is_zero() {
            return r;
        }
    }
}

/// Seed of instance `index` in a run seeded with `seed`: one ChaCha stream per instance.
pub fn instance_seed(seed: u64, index: u64) -> u64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng.next_u64()
}

/// Random budgets of total degree at most `degree_max` for one fuzz instance.
pub fn random_profile(kind: Kind, degree_max: usize, seed: u64) -> GenProfile {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let lowest = usize::from(kind != Kind::Gaussian);
    let deg = rng.gen_range(lowest..=degree_max.max(lowest));
    let pairs = rng.gen_range(0..=deg / 2);
    let mut real = deg - 2 * pairs;
    if real == 0 && pairs == 0 && kind != Kind::Gaussian {
        real = 1;
    }
    GenProfile {
        kind,
        degree_max,
        real_root_budget: real,
        nonreal_pair_budget: pairs,
        multiplicity_max: 3,
        coefficient_height: 5,
        seed,
        adversarial: rng.gen_ratio(1, 8),
    }
}

/// True when `r` is a root of the polynomial; used to confirm constructed roots.
pub fn is_root(p: &Poly, r: &Rational) -> bool {
    p.eval(r).is_zero()
}
