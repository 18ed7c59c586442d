//! The invariant ledger: every counting statement in scope, evaluated exactly on one function.

use hawaii_core::hawaii::{compute_shift_for, type_bound, verify_theorem2, PropertyAVerdict, Verdict};
use hawaii_core::{Analysis, CountSummary, FnKind, LpStarFn, Poly, Result};
use serde::{Serialize, Serializer};

use crate::landscape::{Curve, End, Landscape};

use Curve::{Deriv, Phi, Second, Q, Q1};

/// Outcome of one ledger statement on one function.
#[derive(Clone, Debug, Serialize)]
pub struct LedgerEntry {
    pub name: &'static str,
    /// The statement being checked.
    pub claim: &'static str,
    /// Which functions or intervals the statement applies to.
    pub scope: &'static str,
    #[serde(serialize_with = "verdict_str")]
    pub verdict: Verdict,
    /// Applicable cases evaluated (intervals, points or 1 for global statements).
    pub cases: usize,
    /// The violated precondition when not applicable, the offending case when failed.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

fn verdict_str<S: Serializer>(v: &Verdict, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(v.as_str())
}

/// Names of all ledger entries, in report order.
pub const ENTRY_NAMES: [&str; 34] = [
    "q_parity",
    "q1_parity",
    "nonreal_drop_lower_bound",
    "hawaii_upper_bound",
    "extra_zero_sandwich",
    "extra_zero_case_formula",
    "multiplicity_transfer",
    "q1_regular_at_critical_points",
    "q_negative_at_inflections",
    "real_rooted_q_zero_free",
    "real_rooted_derivative_tight",
    "property_a_two_sided_bound",
    "property_a_type_bound",
    "multiple_zeros_two_sided_bound",
    "multiple_zeros_type_bound",
    "consecutive_critical_odd",
    "isolated_zero_even_sides",
    "outer_interval_even",
    "outer_critical_parity",
    "sign_condition",
    "common_zero_multiplicity",
    "q_bounded_by_q1",
    "inflection_block_bound",
    "consecutive_critical_bound",
    "critical_cluster_bound",
    "outer_critical_floor_bound",
    "zero_adjacent_bound",
    "property_a_interval_bound",
    "axis_free_of_q1_zeros",
    "axis_single_q1_zero",
    "axis_q_at_most_q1",
    "axis_zero_free",
    "axis_single_zero",
    "shift_construction",
];

/// Accumulates cases of one entry; the first failure is kept as the witness.
struct Tally {
    cases: usize,
    failure: Option<String>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            cases: 0,
            failure: None,
        }
    }

    fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(witness());
        }
    }

    fn finish(self, name: &'static str, claim: &'static str, scope: &'static str, na: &str) -> LedgerEntry {
        let (verdict, detail) = match (self.cases, self.failure) {
            (_, Some(w)) => (Verdict::Fail, Some(w)),
            (0, None) => (Verdict::NotApplicable, Some(na.to_string())),
            _ => (Verdict::Pass, None),
        };
        LedgerEntry {
            name,
            claim,
            scope,
            verdict,
            cases: self.cases,
            detail,
        }
    }
}

struct Ctx<'a> {
    an: &'a Analysis,
    l: Landscape,
    s: CountSummary,
    kind: FnKind,
    pa: PropertyAVerdict,
    /// Sign of `φ'φ''QQ₁` is the sign of this polynomial off the landscape.
    sign_product: Poly,
    /// Sign of `φφ''`.
    phi_second: Poly,
}

/// Evaluates every ledger entry on `f`.
pub fn run_ledger(f: &LpStarFn) -> Result<Vec<LedgerEntry>> {
    ledger_for(&f.analyze()?)
}

/// Evaluates every ledger entry on an existing analysis.
pub fn ledger_for(an: &Analysis) -> Result<Vec<LedgerEntry>> {
    let t = &an.tower;
    let cx = Ctx {
        an,
        l: Landscape::new(an)?,
        s: an.summary,
        kind: an.function.kind(),
        pa: PropertyAVerdict::from_analysis(an)?,
        sign_product: &(&(&t.p1 * &t.p2) * &an.pair.nf) * &an.pair.nf1,
        phi_second: &t.p0 * &t.p2,
    };
    let mut out = global_entries(&cx);
    out.extend(parity_entries(&cx));
    out.extend(interval_entries(&cx));
    out.extend(outer_entries(&cx));
    out.extend(zero_adjacent_entries(&cx));
    out.extend(axis_entries(&cx));
    out.push(shift_entry(&cx));
    debug_assert_eq!(out.iter().map(|e| e.name).collect::<Vec<_>>(), ENTRY_NAMES);
    Ok(out)
}

fn global(
    name: &'static str,
    claim: &'static str,
    scope: &'static str,
    applies: Option<&str>,
    ok: impl FnOnce() -> (bool, String),
) -> LedgerEntry {
    let mut t = Tally::new();
    let na = applies.unwrap_or("");
    if applies.is_none() {
        let (pass, w) = ok();
        t.check(pass, || w);
    }
    t.finish(name, claim, scope, na)
}

fn global_entries(cx: &Ctx) -> Vec<LedgerEntry> {
    let s = cx.s;
    let (two_m, two_m1, zq, zq1) = (s.two_m as i64, s.two_m1 as i64, s.zr_q as i64, s.zr_q1 as i64);
    let extra = s.extra as i64;
    let l = &cx.l;
    let mut out = vec![
        global(
            "q_parity",
            "Q has an even number of real zeros, counting multiplicity",
            "every function",
            None,
            || (zq % 2 == 0, format!("Z(Q) = {zq}")),
        ),
        global(
            "q1_parity",
            "Q1 has an even number of real zeros, counting multiplicity",
            "every function",
            None,
            || (zq1 % 2 == 0, format!("Z(Q1) = {zq1}")),
        ),
        global(
            "nonreal_drop_lower_bound",
            "Z(Q) >= 2m - 2m1",
            "every function",
            None,
            || {
                (
                    two_m - two_m1 <= zq,
                    format!("2m = {two_m}, 2m1 = {two_m1}, Z(Q) = {zq}"),
                )
            },
        ),
        global("hawaii_upper_bound", "Z(Q) <= 2m", "every function", None, || {
            (zq <= two_m, format!("2m = {two_m}, Z(Q) = {zq}"))
        }),
        global(
            "extra_zero_sandwich",
            "2m <= E + 2m1 <= 2m + 2",
            "every function except polynomials without real zeros",
            (cx.kind == FnKind::Polynomial && s.real_zeros == 0)
                .then_some("polynomial without real zeros, where E + 2m1 = 2m - 1"),
            || {
                let v = extra + two_m1;
                (
                    two_m <= v && v <= two_m + 2,
                    format!("2m = {two_m}, 2m1 = {two_m1}, E = {extra}"),
                )
            },
        ),
        global(
            "extra_zero_case_formula",
            "E equals 2m - 2m1 shifted by the function type and the presence of real zeros",
            "every function",
            None,
            || {
                let expected = two_m - two_m1 + extra_shift(cx.kind, s.real_zeros > 0);
                (extra == expected, format!("E = {extra}, expected {expected}"))
            },
        ),
    ];

    let mut t = Tally::new();
    for (i, p) in l.points.iter().enumerate() {
        if p.has(Deriv) && !p.has(Phi) {
            t.check(p.m(Q) + 1 == p.m(Deriv), || {
                format!(
                    "at {}: phi' multiplicity {}, Q multiplicity {}",
                    l.describe(End::Closed(i)),
                    p.m(Deriv),
                    p.m(Q)
                )
            });
        }
    }
    out.push(t.finish(
        "multiplicity_transfer",
        "a zero of phi' of multiplicity M where phi does not vanish is a zero of Q of multiplicity M - 1",
        "real zeros of phi' that are not zeros of phi",
        "phi' has no real zeros off the zeros of phi",
    ));

    let mut t = Tally::new();
    if !l.q1_vanishes {
        for (i, p) in l.points.iter().enumerate() {
            if p.has(Deriv) {
                t.check(!p.has(Q1), || {
                    format!("Q1 vanishes at the zero {} of phi'", l.describe(End::Closed(i)))
                });
            }
        }
    }
    out.push(t.finish(
        "q1_regular_at_critical_points",
        "Q1 does not vanish at real zeros of phi'",
        "real zeros of phi'",
        "phi' has no real zeros",
    ));

    let mut t = Tally::new();
    for (i, p) in l.points.iter().enumerate() {
        if p.has(Second) && !p.has(Phi) && !p.has(Deriv) {
            let neg = hawaii_core::realroots::sign_at(&cx.an.pair.nf, &p.x) < 0;
            t.check(neg && !p.has(Q), || {
                format!("Q is not negative at the zero {} of phi''", l.describe(End::Closed(i)))
            });
        }
    }
    out.push(t.finish(
        "q_negative_at_inflections",
        "Q = -(phi'/phi)^2 < 0 at real zeros of phi'' where phi and phi' do not vanish",
        "real zeros of phi'' off the zeros of phi and phi'",
        "phi'' has no real zeros off the zeros of phi and phi'",
    ));

    out.push(global(
        "real_rooted_q_zero_free",
        "Q has no real zeros when phi has only real zeros",
        "2m = 0",
        (two_m != 0).then_some("phi has nonreal zeros"),
        || (zq == 0, format!("Z(Q) = {zq}")),
    ));
    out.push(global(
        "real_rooted_derivative_tight",
        "Z(Q) = 2m when phi' has only real zeros",
        "2m1 = 0",
        (two_m1 != 0).then_some("phi' has nonreal zeros"),
        || (zq == two_m, format!("2m = {two_m}, Z(Q) = {zq}")),
    ));

    let (_, t2) = verify_theorem2(&s, &cx.pa);
    let tb = type_bound(cx.kind, &s);
    let two_sided = |lo: i64| {
        (
            lo <= zq && zq <= lo + zq1,
            format!("{lo} <= Z(Q) = {zq} <= {}", lo + zq1),
        )
    };
    let no_a = (!cx.pa.overall).then_some("property A fails");
    out.push(global(
        "property_a_two_sided_bound",
        "2m - 2m1 <= Z(Q) <= 2m - 2m1 + Z(Q1) under property A",
        "functions with property A",
        no_a,
        || two_sided(t2.lower),
    ));
    out.push(global(
        "property_a_type_bound",
        "B <= Z(Q) <= B + Z(Q1) under property A, B = 2[E/2] shifted by the function type",
        "functions with property A",
        no_a,
        || two_sided(tb),
    ));
    let only_multiple = s.real_zeros > 0 && cx.an.p_roots.iter().all(|(_, m)| *m >= 2);
    let not_multiple = (!only_multiple).then_some("phi has no real zeros or a simple real zero");
    out.push(global(
        "multiple_zeros_two_sided_bound",
        "2m - 2m1 <= Z(Q) <= 2m - 2m1 + Z(Q1) when every real zero of phi is multiple",
        "functions whose real zeros are all multiple",
        not_multiple,
        || two_sided(t2.lower),
    ));
    out.push(global(
        "multiple_zeros_type_bound",
        "B <= Z(Q) <= B + Z(Q1) when every real zero of phi is multiple",
        "functions whose real zeros are all multiple",
        not_multiple,
        || two_sided(tb),
    ));
    out
}

/// `E − (2m − 2m₁)` by function type.
fn extra_shift(kind: FnKind, has_real: bool) -> i64 {
    let r = i64::from(has_real);
    match kind {
        FnKind::Polynomial => r - 1,
        FnKind::ExpLinear => r,
        FnKind::Gaussian => 1 + r,
    }
}

/// Consecutive real zeros of `phi'` (by index) with no zero of `phi` strictly between.
fn consecutive_critical(l: &Landscape) -> Vec<(usize, usize)> {
    let b = l.zeros_of(Deriv);
    b.windows(2)
        .map(|w| (w[0], w[1]))
        .filter(|&(i, j)| l.free_of(&[Phi], End::Open(i), End::Open(j)))
        .collect()
}

fn parity_entries(cx: &Ctx) -> Vec<LedgerEntry> {
    let l = &cx.l;
    let mut out = Vec::new();

    let mut t = Tally::new();
    for (i, j) in consecutive_critical(l) {
        if l.point(i).has(Phi) || l.point(j).has(Phi) {
            continue;
        }
        let z = l.count(Q, End::Open(i), End::Open(j));
        t.check(z % 2 == 1, || {
            format!("Z(Q) = {z} on {}", l.describe_range(End::Open(i), End::Open(j)))
        });
    }
    out.push(t.finish(
        "consecutive_critical_odd",
        "Q has an odd number of real zeros between consecutive real zeros of phi' where phi does not vanish",
        "consecutive real zeros of phi', phi nonzero on the closed interval",
        "no pair of consecutive real zeros of phi' free of zeros of phi",
    ));

    let mut t = Tally::new();
    let b = l.zeros_of(Deriv);
    for a in l.zeros_of(Phi) {
        let below = b.iter().rev().find(|&&j| j < a).copied();
        let above = b.iter().find(|&&j| j > a).copied();
        for side in [below.map(|j| (j, a)), above.map(|j| (a, j))].into_iter().flatten() {
            let (lo, hi) = side;
            let beta = if lo == a { hi } else { lo };
            if l.point(beta).has(Phi) || !l.free_of(&[Phi], End::Open(lo), End::Open(hi)) {
                continue;
            }
            let z = l.count(Q, End::Open(lo), End::Open(hi));
            t.check(z.is_multiple_of(2), || {
                format!("Z(Q) = {z} on {}", l.describe_range(End::Open(lo), End::Open(hi)))
            });
        }
    }
    out.push(t.finish(
        "isolated_zero_even_sides",
        "Q has an even number of real zeros between a zero of phi and the nearest zero of phi' on either side",
        "sides of a real zero of phi bounded by a zero of phi' where phi does not vanish",
        "no real zero of phi has a neighbouring zero of phi' off the zeros of phi",
    ));

    let mut t = Tally::new();
    let a = l.zeros_of(Phi);
    if let (Some(&first), Some(&last)) = (a.first(), a.last()) {
        for (lo, hi) in [(End::NegInf, End::Open(first)), (End::Open(last), End::PosInf)] {
            let z = l.count(Q, lo, hi);
            t.check(z.is_multiple_of(2), || {
                format!("Z(Q) = {z} on {}", l.describe_range(lo, hi))
            });
        }
    }
    out.push(t.finish(
        "outer_interval_even",
        "Q has an even number of real zeros beyond the largest and below the smallest zero of phi",
        "functions with a real zero",
        "phi has no real zeros",
    ));

    let mut t = Tally::new();
    if let (Some(&first), Some(&last)) = (a.first(), a.last()) {
        let outer = [
            (
                End::Open(last),
                End::PosInf,
                b.last().copied().filter(|&j| j > last),
                true,
            ),
            (
                End::NegInf,
                End::Open(first),
                b.first().copied().filter(|&j| j < first),
                false,
            ),
        ];
        for (lo, hi, beta, right) in outer {
            let Some(beta) = beta else { continue };
            let r = l.count(Deriv, lo, hi);
            let (qlo, qhi) = if right {
                (End::Open(beta), End::PosInf)
            } else {
                (End::NegInf, End::Open(beta))
            };
            let z = l.count(Q, qlo, qhi);
            t.check((z % 2 == 1) == r.is_multiple_of(2), || {
                format!(
                    "{r} zeros of phi' outside the zeros of phi, Z(Q) = {z} on {}",
                    l.describe_range(qlo, qhi)
                )
            });
        }
    }
    out.push(t.finish(
        "outer_critical_parity",
        "beyond the outermost zero of phi', Q has an odd number of real zeros iff phi' has an even number of zeros beyond the outermost zero of phi",
        "functions with a real zero and a zero of phi' beyond it",
        "no zero of phi' lies beyond the outermost zeros of phi",
    ));
    out
}

fn interval_entries(cx: &Ctx) -> Vec<LedgerEntry> {
    let l = &cx.l;
    let mut out = Vec::new();
    let rng = |lo, hi| l.describe_range(lo, hi);

    // Maximal ranges free of the given curves, as (lo, hi) ends.
    let maximal = |curves: &[Curve]| -> Vec<(End, End)> {
        let cuts: Vec<usize> = (0..l.len())
            .filter(|&i| curves.iter().any(|&c| l.point(i).has(c)))
            .collect();
        let mut ends = vec![End::NegInf];
        ends.extend(cuts.iter().map(|&i| End::Open(i)));
        ends.push(End::PosInf);
        ends.windows(2).map(|w| (w[0], w[1])).collect()
    };
    // Q is finite at the end and the end is not a multiple zero of phi'.
    let end_checked = |e: End| match e {
        End::Open(i) | End::Closed(i) => !l.point(i).has(Phi) && l.point(i).m(Deriv) < 2,
        _ => false,
    };

    let mut t = Tally::new();
    if !l.second_vanishes && !l.q1_vanishes {
        for (lo, hi) in maximal(&[Phi, Deriv, Second, Q1]) {
            let sign = l.sign_after(&cx.sign_product, lo);
            let z = l.count(Q, lo, hi);
            let at_end = match hi {
                End::Open(j) if end_checked(hi) => l.point(j).m(Q),
                _ => 0,
            };
            if sign > 0 {
                t.check(z == 0 && at_end == 0, || {
                    format!(
                        "phi'phi''QQ1 > 0 after the start, Z(Q) = {z} on {}, {at_end} at the end",
                        rng(lo, hi)
                    )
                });
            } else {
                t.check(z <= 1 && (z == 0 || at_end == 0), || {
                    format!(
                        "phi'phi''QQ1 < 0 after the start, Z(Q) = {z} on {}, {at_end} at the end",
                        rng(lo, hi)
                    )
                });
            }
        }
    }
    out.push(t.finish(
        "sign_condition",
        "on a range free of zeros of phi, phi', phi'', Q1: if phi'phi''QQ1 > 0 just after the start, Q has no zeros up to and including the end; if < 0, at most one zero and then none at the end (the end condition is skipped at multiple zeros of phi')",
        "maximal ranges free of zeros of phi, phi', phi'' and Q1",
        "phi'' or Q1 vanishes identically",
    ));

    let mut t = Tally::new();
    if !l.second_vanishes && !l.q1_vanishes {
        for (lo, hi) in maximal(&[Phi, Deriv, Second]) {
            let xs: Vec<usize> = l.zeros_of(Q1).into_iter().filter(|&i| in_range(i, lo, hi)).collect();
            for (k, &xi) in xs.iter().enumerate() {
                let p = l.point(xi);
                if !p.has(Q) {
                    continue;
                }
                let left = if k == 0 { lo } else { End::Open(xs[k - 1]) };
                let right = xs.get(k + 1).map_or(hi, |&j| End::Open(j));
                let at_right = match right {
                    End::Open(j) if end_checked(right) => l.point(j).m(Q),
                    _ => 0,
                };
                let zl = l.count(Q, left, End::Open(xi));
                let zr = l.count(Q, End::Open(xi), right);
                t.check(p.m(Q) == p.m(Q1) + 1 && zl == 0 && zr == 0 && at_right == 0, || {
                    format!(
                        "common zero {} of Q (mult {}) and Q1 (mult {}); Z(Q) = {zl} before, {zr} after, {at_right} at the end",
                        l.describe(End::Closed(xi)),
                        p.m(Q),
                        p.m(Q1)
                    )
                });
            }
        }
    }
    out.push(t.finish(
        "common_zero_multiplicity",
        "a common zero of Q and Q1 (multiplicity M) inside a range free of zeros of phi, phi', phi'' has Q-multiplicity M + 1, and Q has no other zeros up to the next zero of Q1 (including it unless it is a multiple zero of phi')",
        "common real zeros of Q and Q1 off the zeros of phi, phi', phi''",
        "no common real zero of Q and Q1 off the zeros of phi, phi', phi''",
    ));

    let mut t = Tally::new();
    if !l.second_vanishes {
        for (lo, hi) in maximal(&[Phi, Deriv, Second]) {
            let (z, z1) = (l.count(Q, lo, hi), l.count(Q1, lo, hi));
            t.check(z <= 1 + z1, || format!("Z(Q) = {z}, Z(Q1) = {z1} on {}", rng(lo, hi)));
        }
    }
    out.push(t.finish(
        "q_bounded_by_q1",
        "Z(Q) <= 1 + Z(Q1) on a range free of zeros of phi, phi', phi''",
        "maximal ranges free of zeros of phi, phi' and phi''",
        "phi'' vanishes identically",
    ));

    let mut t = Tally::new();
    for (lo, hi) in maximal(&[Phi, Deriv]) {
        let g: Vec<usize> = l
            .zeros_of(Second)
            .into_iter()
            .filter(|&i| in_range(i, lo, hi))
            .collect();
        for (x, &gi) in g.iter().enumerate() {
            for &gj in &g[x + 1..] {
                let (a, b) = (End::Closed(gi), End::Closed(gj));
                let q = l.count(Second, a, b);
                let (z, z1) = (l.count(Q, a, b) as i64, l.count(Q1, a, b) as i64);
                let slack = if q % 2 == 1 {
                    0
                } else if l.sign_below(&cx.phi_second, gi) > 0 {
                    -1
                } else {
                    1
                };
                t.check(z % 2 == 0 && z <= z1 + slack, || {
                    format!(
                        "{q} zeros of phi'', Z(Q) = {z}, Z(Q1) = {z1}, allowed slack {slack} on {}",
                        rng(a, b)
                    )
                });
            }
        }
    }
    out.push(t.finish(
        "inflection_block_bound",
        "between two zeros of phi'' with q zeros of phi'' in between and phi, phi' zero-free, Z(Q) is even and at most Z(Q1) (q odd), Z(Q1) - 1 (q even, phi phi'' > 0 before) or Z(Q1) + 1 (q even, phi phi'' < 0 before)",
        "pairs of real zeros of phi'' with phi and phi' zero-free on the closed interval",
        "no two real zeros of phi'' share a range free of zeros of phi and phi'",
    ));

    let mut t = Tally::new();
    for (i, j) in consecutive_critical(l) {
        if l.point(i).has(Phi) || l.point(j).has(Phi) {
            continue;
        }
        let (a, b) = (End::Open(i), End::Open(j));
        let (z, z1) = (l.count(Q, a, b), l.count(Q1, a, b));
        t.check(1 <= z && z <= 1 + z1, || {
            format!("Z(Q) = {z}, Z(Q1) = {z1} on {}", rng(a, b))
        });
    }
    out.push(t.finish(
        "consecutive_critical_bound",
        "1 <= Z(Q) <= 1 + Z(Q1) between consecutive real zeros of phi' where phi does not vanish",
        "consecutive real zeros of phi', phi nonzero on the closed interval",
        "no pair of consecutive real zeros of phi' free of zeros of phi",
    ));

    let mut t = Tally::new();
    for (lo, hi) in maximal(&[Phi]) {
        let bs: Vec<usize> = l.zeros_of(Deriv).into_iter().filter(|&i| in_range(i, lo, hi)).collect();
        for (x, &bi) in bs.iter().enumerate() {
            for &bj in &bs[x..] {
                let (a, b) = (End::Closed(bi), End::Closed(bj));
                let q = l.count(Deriv, a, b);
                if q < 2 {
                    continue;
                }
                let (z, z1) = (l.count(Q, a, b), l.count(Q1, a, b));
                t.check(q - 1 <= z && z <= q - 1 + z1, || {
                    format!("{q} zeros of phi', Z(Q) = {z}, Z(Q1) = {z1} on {}", rng(a, b))
                });
            }
        }
    }
    out.push(t.finish(
        "critical_cluster_bound",
        "q - 1 <= Z(Q) <= q - 1 + Z(Q1) on a closed interval between zeros of phi' holding q >= 2 zeros of phi' and no zero of phi",
        "closed intervals between real zeros of phi' with at least two zeros of phi' and none of phi",
        "no closed interval free of zeros of phi holds two zeros of phi'",
    ));
    out
}

fn in_range(i: usize, lo: End, hi: End) -> bool {
    let after = match lo {
        End::NegInf => true,
        End::Open(j) => i > j,
        End::Closed(j) => i >= j,
        End::PosInf => false,
    };
    let before = match hi {
        End::PosInf => true,
        End::Open(j) => i < j,
        End::Closed(j) => i <= j,
        End::NegInf => false,
    };
    after && before
}

fn outer_entries(cx: &Ctx) -> Vec<LedgerEntry> {
    let l = &cx.l;
    let a = l.zeros_of(Phi);
    let b = l.zeros_of(Deriv);
    let mut t = Tally::new();
    if let (Some(&first), Some(&last)) = (a.first(), a.last()) {
        let sides = [
            (
                End::Open(last),
                End::PosInf,
                b.iter().copied().find(|&j| j > last),
                true,
            ),
            (
                End::NegInf,
                End::Open(first),
                b.iter().rev().copied().find(|&j| j < first),
                false,
            ),
        ];
        for (lo, hi, beta, right) in sides {
            let Some(beta) = beta else { continue };
            let r = l.count(Deriv, lo, hi);
            let (qlo, qhi) = if right {
                (End::Closed(beta), End::PosInf)
            } else {
                (End::NegInf, End::Closed(beta))
            };
            let (z, z1) = (l.count(Q, qlo, qhi), l.count(Q1, qlo, qhi));
            let f = 2 * (r / 2);
            t.check(f <= z && z <= f + z1, || {
                format!("r = {r}, Z(Q) = {z}, Z(Q1) = {z1} on {}", l.describe_range(qlo, qhi))
            });
        }
    }
    vec![t.finish(
        "outer_critical_floor_bound",
        "with r >= 1 zeros of phi' beyond the outermost zero of phi, 2[r/2] <= Z(Q) <= 2[r/2] + Z(Q1) from the nearest such zero outward",
        "functions with a real zero and a zero of phi' beyond it",
        "no zero of phi' lies beyond the outermost zeros of phi",
    )]
}

fn zero_adjacent_entries(cx: &Ctx) -> Vec<LedgerEntry> {
    let l = &cx.l;
    let b = l.zeros_of(Deriv);
    let mut out = Vec::new();

    let mut t = Tally::new();
    for a in l.zeros_of(Phi) {
        let below = b.iter().rev().find(|&&j| j < a).map_or(End::NegInf, |&j| End::Open(j));
        let above = b.iter().find(|&&j| j > a).map_or(End::PosInf, |&j| End::Open(j));
        for (lo, hi) in [(below, End::Open(a)), (End::Open(a), above)] {
            if !l.free_of(&[Phi], lo, hi) {
                continue;
            }
            let (z, z1) = (l.count(Q, lo, hi), l.count(Q1, lo, hi));
            let slack = z1 % 2;
            t.check(z <= z1 + slack, || {
                format!("Z(Q) = {z}, Z(Q1) = {z1} on {}", l.describe_range(lo, hi))
            });
        }
    }
    out.push(t.finish(
        "zero_adjacent_bound",
        "between a real zero of phi and the nearest zero of phi' (or infinity), Z(Q) <= Z(Q1) if Z(Q1) is even and Z(Q) <= Z(Q1) + 1 if odd",
        "sides of each real zero of phi",
        "phi has no real zeros",
    ));

    let mut t = Tally::new();
    for a in l.zeros_of(Phi) {
        let below = b.iter().rev().find(|&&j| j < a).map_or(End::NegInf, |&j| End::Open(j));
        let above = b.iter().find(|&&j| j > a).map_or(End::PosInf, |&j| End::Open(j));
        let clear = l.count(Q, below, End::Open(a)) == 0 || l.count(Q, End::Open(a), above) == 0;
        let multiple_exempt = l.point(a).m(Phi) >= 2 && below != End::NegInf && above != End::PosInf;
        if !(clear || multiple_exempt) {
            continue;
        }
        let (z, z1) = (l.count(Q, below, above), l.count(Q1, below, above));
        t.check(z <= z1, || {
            format!("Z(Q) = {z}, Z(Q1) = {z1} on {}", l.describe_range(below, above))
        });
    }
    out.push(t.finish(
        "property_a_interval_bound",
        "0 <= Z(Q) <= Z(Q1) between the zeros of phi' around a real zero of phi with property A there (or a multiple zero)",
        "real zeros of phi with property A or of multiplicity at least 2",
        "no real zero of phi has property A",
    ));
    out
}

fn axis_entries(cx: &Ctx) -> Vec<LedgerEntry> {
    let l = &cx.l;
    let all = |c| l.count(c, End::NegInf, End::PosInf);
    let (za, zb, zg, zq1_distinct) = (all(Phi), all(Deriv), all(Second), l.zeros_of(Q1).len());
    let (zq, zq1) = (cx.s.zr_q, cx.s.zr_q1);
    let regular = !l.second_vanishes && zb == 0 && zg == 0;
    let mut out = Vec::new();
    out.push(global(
        "axis_free_of_q1_zeros",
        "Z(Q) = 0 when phi', phi'', Q1 have no real zeros",
        "phi', phi'' and Q1 zero-free on the real line",
        (!(regular && !l.q1_vanishes && zq1 == 0)).then_some("phi', phi'' or Q1 has a real zero"),
        || (zq == 0, format!("Z(Q) = {zq}")),
    ));
    out.push(global(
        "axis_single_q1_zero",
        "Z(Q) = 0 when phi', phi'' have no real zeros and Q1 has exactly one",
        "phi', phi'' zero-free and Q1 with one distinct real zero",
        (!(regular && !l.q1_vanishes && zq1_distinct == 1))
            .then_some("phi' or phi'' has a real zero, or Q1 does not have exactly one"),
        || (zq == 0, format!("Z(Q) = {zq}")),
    ));
    out.push(global(
        "axis_q_at_most_q1",
        "Z(Q) <= Z(Q1) when phi', phi'' have no real zeros",
        "phi' and phi'' zero-free on the real line",
        (!regular).then_some("phi' or phi'' has a real zero"),
        || (zq <= zq1, format!("Z(Q) = {zq}, Z(Q1) = {zq1}")),
    ));
    out.push(global(
        "axis_zero_free",
        "Z(Q) <= Z(Q1) when phi, phi' have no real zeros",
        "phi and phi' zero-free on the real line",
        (!(za == 0 && zb == 0)).then_some("phi or phi' has a real zero"),
        || (zq <= zq1, format!("Z(Q) = {zq}, Z(Q1) = {zq1}")),
    ));
    let a = l.zeros_of(Phi);
    let single = a.len() == 1 && l.zeros_of(Deriv).iter().all(|&j| j == a[0]);
    let clear =
        single && (l.count(Q, End::NegInf, End::Open(a[0])) == 0 || l.count(Q, End::Open(a[0]), End::PosInf) == 0);
    out.push(global(
        "axis_single_zero",
        "Z(Q) <= Z(Q1) when phi has one real zero, phi' vanishes nowhere else and property A holds there",
        "one real zero of phi, no other zeros of phi', property A",
        (!clear).then_some("phi does not have a single real zero with phi' zero-free elsewhere and property A"),
        || (zq <= zq1, format!("Z(Q) = {zq}, Z(Q1) = {zq1}")),
    ));
    out
}

fn shift_entry(cx: &Ctx) -> LedgerEntry {
    let mut t = Tally::new();
    if cx.s.zr_q > 0 {
        match compute_shift_for(cx.an) {
            Ok(r) => t.check(r.property_a_after && r.signs_ok && r.zc_psi_prime < r.zc_phi, || {
                format!(
                    "property A after: {}, signs ok: {}, Zc(psi') = {}, Zc(phi) = {}",
                    r.property_a_after, r.signs_ok, r.zc_psi_prime, r.zc_phi
                )
            }),
            Err(e) => t.check(false, || format!("shift construction failed: {e}")),
        }
    }
    t.finish(
        "shift_construction",
        "multiplying by exp(-sigma* z), sigma* the largest value of phi'/phi at real zeros of Q, gives property A and fewer nonreal zeros of the derivative",
        "functions with Z(Q) > 0",
        "Q has no real zeros",
    )
}

/// True when no entry failed.
pub fn all_pass(entries: &[LedgerEntry]) -> bool {
    entries.iter().all(|e| !e.verdict.is_fail())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn entries(coeffs: &[i64]) -> Vec<LedgerEntry> {
        run_ledger(&LpStarFn::polynomial(Poly::from_i64(coeffs)).unwrap()).unwrap()
    }

    fn verdict(e: &[LedgerEntry], name: &str) -> Verdict {
        e.iter().find(|x| x.name == name).unwrap().verdict
    }

    #[test]
    fn real_rooted_passes() {
        let e = entries(&[0, -1, 0, 1]);
        assert!(all_pass(&e));
        assert_eq!(verdict(&e, "real_rooted_q_zero_free"), Verdict::Pass);
        assert_eq!(verdict(&e, "shift_construction"), Verdict::NotApplicable);
    }

    #[test]
    fn z2_plus_1() {
        let e = entries(&[1, 0, 1]);
        assert!(all_pass(&e));
        assert_eq!(verdict(&e, "consecutive_critical_bound"), Verdict::NotApplicable);
        assert_eq!(verdict(&e, "shift_construction"), Verdict::Pass);
        assert_eq!(verdict(&e, "real_rooted_derivative_tight"), Verdict::Pass);
    }

    #[test]
    fn names_in_order() {
        let e = entries(&[1, 0, 1]);
        assert_eq!(e.len(), ENTRY_NAMES.len());
        let na = e.iter().filter(|x| x.verdict == Verdict::NotApplicable);
        assert!(na.clone().all(|x| x.detail.is_some()));
    }
}
