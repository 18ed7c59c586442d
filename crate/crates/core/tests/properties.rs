//! Randomized invariants of the exact engine.

use hawaii_core::poly::{gcd, squarefree_part};
use hawaii_core::rational::{int, rat};
use hawaii_core::realroots::{count_roots, count_roots_extension, isolate_roots, RatBound};
use hawaii_core::{parse, AlgebraicNumber, Bound, LpStarFn, Poly, Rational};
use proptest::prelude::*;

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}

fn small_poly(max_len: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(-6i64..=6, 1..=max_len).prop_map(|c| Poly::from_i64(&c))
}

fn nonzero_poly(max_len: usize) -> impl Strategy<Value = Poly> {
    small_poly(max_len).prop_filter("nonzero", |p| !p.is_zero())
}

fn ratio() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=5).prop_map(|(n, d)| rat(n, d))
}

/// `p·exp(−a z² + b z)` with `p` of degree ≥ 1 when there is no exponential factor.
fn function() -> impl Strategy<Value = LpStarFn> {
    (nonzero_poly(6), 0i64..=3, 1i64..=2, ratio())
        .prop_filter_map("admissible", |(p, a, ad, b)| LpStarFn::new(p, rat(a, ad), b).ok())
}

proptest! {
    #![proptest_config(config(48))]

    #[test]
    fn critical_numerator_is_shift_invariant(f in function(), sigma in ratio()) {
        let before = f.analyze().unwrap();
        let after = f.shift_by_rational(&sigma).analyze().unwrap();
        prop_assert_eq!(&before.pair.q_num, &after.pair.q_num);
        prop_assert_eq!(&before.pair.q_den, &after.pair.q_den);
        prop_assert_eq!(before.summary.zr_q, after.summary.zr_q);
        prop_assert_eq!(before.summary.two_m, after.summary.two_m);
    }

    #[test]
    fn counts_are_mirror_invariant(f in function()) {
        let a = f.analyze().unwrap();
        let b = f.mirror().analyze().unwrap();
        prop_assert_eq!(a.summary, b.summary);
        prop_assert_eq!(a.pair.q_num.mirror(), b.pair.q_num);
    }

    #[test]
    fn unconditional_bounds(f in function()) {
        let s = f.count_summary().unwrap();
        prop_assert_eq!(s.two_m % 2, 0);
        prop_assert_eq!(s.two_m1 % 2, 0);
        prop_assert!(s.zr_q <= s.two_m, "{}: {:?}", f, s);
        prop_assert!(s.zr_q + s.two_m1 >= s.two_m, "{}: {:?}", f, s);
    }

    #[test]
    fn parse_print_round_trip(f in function()) {
        let g = parse(&f.to_string()).unwrap().function;
        prop_assert_eq!(g, f);
    }
}

proptest! {
    #![proptest_config(config(128))]

    #[test]
    fn division_identity(a in small_poly(7), b in nonzero_poly(4)) {
        let (q, r) = a.div_rem(&b).unwrap();
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.is_zero() || r.degree() < b.degree());
    }

    #[test]
    fn product_rule(a in small_poly(5), b in small_poly(5)) {
        let lhs = (&a * &b).derivative();
        let rhs = &(&a.derivative() * &b) + &(&a * &b.derivative());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn gcd_divides_both(a in nonzero_poly(5), b in nonzero_poly(5), c in nonzero_poly(3)) {
        let (x, y) = (&a * &c, &b * &c);
        let g = gcd(&x, &y).unwrap();
        prop_assert!(x.rem(&g).unwrap().is_zero());
        prop_assert!(y.rem(&g).unwrap().is_zero());
        prop_assert!(g.rem(&c.monic()).unwrap().is_zero());
    }

    #[test]
    fn squarefree_part_keeps_roots(a in nonzero_poly(4)) {
        let p = &a * &a;
        let s = squarefree_part(&p).unwrap();
        prop_assert!(p.rem(&s).unwrap().is_zero());
        if !s.is_constant() {
            prop_assert!(gcd(&s, &s.derivative()).unwrap().is_constant());
        }
    }

    #[test]
    fn isolation_matches_construction(
        roots in prop::collection::btree_set(-20i64..=20, 0..5),
        mults in prop::collection::vec(1usize..=3, 5),
        quad in prop::option::of((-4i64..=4, 1i64..=9)),
        scale in 1i64..=7,
    ) {
        let roots: Vec<(Rational, usize)> = roots.iter().zip(&mults).map(|(r, m)| (rat(*r, 2), *m)).collect();
        let mut p = Poly::constant(int(scale));
        for (r, m) in &roots {
            p = &p * &Poly::linear_root(r).pow(*m);
        }
        if let Some((u, w)) = quad {
            p = &p * &Poly::from_i64(&[u * u + w, -2 * u, 1]);
        }
        prop_assume!(!p.is_constant());
        let found: Vec<(Rational, usize)> = isolate_roots(&p)
            .unwrap()
            .iter()
            .map(|(x, m)| (x.as_rational().cloned().expect("rational root"), *m))
            .collect();
        prop_assert_eq!(found, roots);
    }

    #[test]
    fn extension_count_at_rational_point(a in nonzero_poly(5), b in small_poly(5), s in ratio()) {
        let sigma = AlgebraicNumber::rational(s.clone());
        // f(σ, z) = A(z) − σ B(z), written coefficientwise in σ.
        let len = a.coeffs().len().max(b.coeffs().len());
        let f: Vec<Poly> = (0..len).map(|i| Poly::new(vec![a.coeff(i), -b.coeff(i)])).collect();
        let direct = &a - &b.scale(&s);
        prop_assume!(!direct.is_zero());
        let ext = count_roots_extension(&f, &sigma, &RatBound::NegInf, &RatBound::PosInf, true).unwrap();
        let plain = count_roots(&direct, &Bound::NegInf, &Bound::PosInf, true).unwrap();
        prop_assert_eq!(ext, plain);
    }

    #[test]
    fn extension_counts_over_conjugates(a in nonzero_poly(4), b in nonzero_poly(4)) {
        // Roots of A − √2 B and A + √2 B together are the roots of A² − 2B².
        let root2 = |lo: i64, hi: i64| AlgebraicNumber::new(Poly::from_i64(&[-2, 0, 1]), int(lo), int(hi)).unwrap();
        let len = a.coeffs().len().max(b.coeffs().len());
        let f: Vec<Poly> = (0..len).map(|i| Poly::new(vec![a.coeff(i), -b.coeff(i)])).collect();
        let norm = &(&a * &a) - &(&b * &b).scale(&int(2));
        let all = (RatBound::NegInf, RatBound::PosInf);
        let plus = count_roots_extension(&f, &root2(1, 2), &all.0, &all.1, true).unwrap();
        let minus = count_roots_extension(&f, &root2(-2, -1), &all.0, &all.1, true).unwrap();
        let total = count_roots(&norm, &Bound::NegInf, &Bound::PosInf, true).unwrap();
        prop_assert_eq!(plus + minus, total);
    }
}
