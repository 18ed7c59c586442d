mod common;

use common::{compare_count, real_root_count, Agreement, OracleCount};
use hawaii_core::{LpStarFn, Poly};
use hawaii_harness::generate::{generate, instance_seed, random_profile, Kind};
use proptest::prelude::*;

#[test]
fn oracle_on_hand_examples() {
    common::self_check();
    let p = Poly::from_i64(&[0, -1, 0, 1]);
    assert_eq!(real_root_count(&p), OracleCount::Counted(3));
}

#[test]
fn oracle_agrees_on_generated_instances() {
    let (mut compared, mut resolved, mut clustered, mut unresolved, mut vanishing) = (0, 0, 0, 0, 0);
    for kind in Kind::ALL {
        for i in 0..200 {
            let g = generate(&random_profile(kind, 12, instance_seed(11, i))).unwrap();
            let an = g.function.analyze().unwrap();
            for (poly, n) in [(&an.pair.q_num, an.summary.zr_q), (&an.pair.q1_num, an.summary.zr_q1)] {
                match compare_count(poly, n) {
                    Agreement::Agree => compared += 1,
                    Agreement::ResolvedForEngine => resolved += 1,
                    Agreement::Clustered => clustered += 1,
                    Agreement::Unresolved => unresolved += 1,
                    Agreement::Vanishes => vanishing += 1,
                    d @ Agreement::Disagree { .. } => panic!("{}: {d:?}", g.function),
                }
            }
        }
    }
    eprintln!("compared {compared}, resolved {resolved}, clustered {clustered}, unresolved {unresolved}, vanishing {vanishing}");
    assert_eq!(unresolved, 0);
    assert!(compared > 1000);
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn oracle_matches_q_counts(coeffs in prop::collection::vec(-9i64..=9, 2..8)) {
        prop_assume!(coeffs.last() != Some(&0));
        let f = LpStarFn::polynomial(Poly::from_i64(&coeffs)).unwrap();
        let an = f.analyze().unwrap();
        let a = compare_count(&an.pair.q_num, an.summary.zr_q);
        prop_assert!(!matches!(a, Agreement::Disagree { .. }), "{}: {:?}", f, a);
    }
}
