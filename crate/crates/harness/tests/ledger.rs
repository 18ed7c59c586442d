use hawaii_core::hawaii::Verdict;
use hawaii_core::{parse, LpStarFn};
use hawaii_harness::fuzz::{run_fuzz, FuzzConfig};
use hawaii_harness::generate::Kind;
use hawaii_harness::ledger::{all_pass, run_ledger, LedgerEntry};

fn ledger(s: &str) -> Vec<LedgerEntry> {
    run_ledger(&parse(s).unwrap().function).unwrap()
}

fn verdict(entries: &[LedgerEntry], name: &str) -> Verdict {
    entries.iter().find(|e| e.name == name).unwrap().verdict
}

#[test]
fn real_rooted_times_gaussian_passes_everything() {
    let f = "(z-1)*(z+2)^2*(3z-1)*exp(-z^2+z)";
    let e = ledger(f);
    assert!(all_pass(&e));
    assert_eq!(parse(f).unwrap().function.count_summary().unwrap().zr_q, 0);
}

#[test]
fn counterexample_unconditional_entries_pass() {
    let e = ledger("z*(z^2-1/4)*(z^2+1)^25");
    assert!(all_pass(&e));
    for name in [
        "q_parity",
        "q1_parity",
        "nonreal_drop_lower_bound",
        "hawaii_upper_bound",
        "outer_interval_even",
    ] {
        assert_eq!(verdict(&e, name), Verdict::Pass, "{name}");
    }
    for name in ["property_a_two_sided_bound", "property_a_type_bound"] {
        let entry = e.iter().find(|x| x.name == name).unwrap();
        assert_eq!(entry.verdict, Verdict::NotApplicable, "{name}");
        assert!(entry.detail.is_some(), "{name} names its precondition");
    }
}

#[test]
fn quadratic_entries() {
    let e = ledger("z^2 + 1");
    assert!(all_pass(&e));
    assert_eq!(verdict(&e, "consecutive_critical_odd"), Verdict::NotApplicable);
    // The outer parity entries are anchored at the outermost real zero of phi, which z^2 + 1 lacks.
    assert_eq!(verdict(&e, "outer_critical_parity"), Verdict::NotApplicable);
    assert_eq!(verdict(&e, "outer_interval_even"), Verdict::NotApplicable);
    assert_eq!(verdict(&e, "hawaii_upper_bound"), Verdict::Pass);
}

#[test]
fn pure_gaussian_is_clean() {
    let f: LpStarFn = parse("exp(-z^2)").unwrap().function;
    assert!(all_pass(&run_ledger(&f).unwrap()));
    let s = f.count_summary().unwrap();
    assert_eq!((s.two_m, s.zr_q), (0, 0));
}

#[test]
fn fuzz_json_is_deterministic() {
    for kind in Kind::ALL {
        let cfg = FuzzConfig::new(kind, 25, 7, 8);
        let a = serde_json::to_string(&run_fuzz(&cfg)).unwrap();
        let b = serde_json::to_string(&run_fuzz(&cfg)).unwrap();
        assert_eq!(a, b);
        assert!(run_fuzz(&cfg).passed());
    }
}
