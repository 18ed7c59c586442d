//! `hawaii`: exact analysis of `p(z)·exp(−a z² + b z)` from the command line.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails, 2 on usage or parse errors.

use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use hawaii_core::hawaii::{hawaii_verdict, BoundCheck, ShiftResult, TheoremVerdicts, Verdict};
use hawaii_core::rational::parse_ratio;
use hawaii_core::realroots::{compare, isolate_roots};
use hawaii_core::{parse, parse_poly, AlgebraicNumber, LpStarFn};
use hawaii_harness::fuzz::{run_fuzz, FuzzConfig, FuzzReport};
use hawaii_harness::generate::Kind;
use hawaii_harness::ledger::{ledger_for, LedgerEntry};
use hawaii_harness::report::{
    exact_decimal, AlgebraicJson, AnalysisReport, CountsJson, FunctionJson, ShiftJson, TimingsJson,
};

#[derive(Parser)]
#[command(name = "hawaii", version, about = "Exact zero counting for p(z)*exp(-a z^2 + b z)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Counts, property A, theorem verdicts and the shift.
    Analyze {
        expr: String,
        #[arg(long)]
        json: bool,
        /// Leave out the timings field.
        #[arg(long)]
        no_timings: bool,
        /// Digits of the decimal enclosures.
        #[arg(long, default_value_t = 12)]
        digits: u32,
    },
    /// Runs one group of checks; exit code 1 when any fails.
    Verify {
        expr: String,
        #[arg(long, value_enum)]
        check: Check,
        #[arg(long)]
        json: bool,
    },
    /// The exponential shift and the verdicts after it.
    Shift {
        expr: String,
        #[arg(long, default_value_t = 20)]
        digits: u32,
        #[arg(long)]
        json: bool,
    },
    /// Isolates the real zeros of a polynomial.
    Isolate {
        poly: String,
        /// Lower end of a closed search range.
        #[arg(long, allow_hyphen_values = true)]
        from: Option<String>,
        /// Upper end of a closed search range.
        #[arg(long, allow_hyphen_values = true)]
        to: Option<String>,
        #[arg(long, default_value_t = 12)]
        digits: u32,
        #[arg(long)]
        json: bool,
    },
    /// Runs the ledger on generated instances and prints a JSON report.
    Fuzz {
        #[arg(long, value_enum)]
        profile: Profile,
        #[arg(long)]
        count: usize,
        /// Defaults to HAWAII_SEED, then 0.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        degree_max: usize,
        #[arg(long)]
        jobs: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Check {
    Hawaii,
    Theorem2,
    Type,
    Lemmas,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum Profile {
    Polynomial,
    ExpLinear,
    Gaussian,
    All,
}

impl Profile {
    fn kinds(self) -> Vec<Kind> {
        match self {
            Profile::Polynomial => vec![Kind::Polynomial],
            Profile::ExpLinear => vec![Kind::ExpLinear],
            Profile::Gaussian => vec![Kind::Gaussian],
            Profile::All => Kind::ALL.to_vec(),
        }
    }
}

/// A usage or parse problem (exit 2) or a computation error.
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

type Outcome = Result<bool, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze {
            expr,
            json,
            no_timings,
            digits,
        } => analyze(&expr, json, no_timings, digits),
        Command::Verify { expr, check, json } => verify(&expr, check, json),
        Command::Shift { expr, digits, json } => shift(&expr, digits, json),
        Command::Isolate {
            poly,
            from,
            to,
            digits,
            json,
        } => isolate(&poly, from.as_deref(), to.as_deref(), digits, json),
        Command::Fuzz {
            profile,
            count,
            seed,
            degree_max,
            jobs,
        } => fuzz(profile, count, seed, degree_max, jobs),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn parse_fn(expr: &str) -> Result<LpStarFn, Failure> {
    Ok(parse(expr)?.function)
}

fn print_json<T: Serialize>(v: &T) -> Result<(), Failure> {
    println!("{}", serde_json::to_string_pretty(v)?);
    Ok(())
}

fn ms(t: Instant) -> f64 {
    (t.elapsed().as_secs_f64() * 1e6).round() / 1e3
}

fn shift_ok(r: &ShiftResult) -> bool {
    r.property_a_after && r.signs_ok && r.zc_psi_prime < r.zc_phi
}

fn verdicts_ok(v: &TheoremVerdicts) -> bool {
    v.all_pass() && v.shift.as_ref().is_none_or(shift_ok)
}

fn bound(b: &BoundCheck) -> String {
    format!("{} <= {} <= {}: {}", b.lower, b.value, b.upper, b.verdict)
}

fn analyze(expr: &str, json: bool, no_timings: bool, digits: u32) -> Outcome {
    let f = parse_fn(expr)?;
    let t = Instant::now();
    let an = f.analyze()?;
    let analyze_ms = ms(t);
    let t = Instant::now();
    let v = TheoremVerdicts::from_analysis(&an)?;
    let verdicts_ms = ms(t);
    let mut report = AnalysisReport::new(&f, &v, digits);
    if !no_timings {
        report.timings_ms = Some(TimingsJson {
            analyze: analyze_ms,
            verdicts: verdicts_ms,
        });
    }
    if json {
        print_json(&report)?;
    } else {
        print_summary(&f, &v, digits);
        if let Some(t) = &report.timings_ms {
            println!("time: analyze {} ms, verdicts {} ms", t.analyze, t.verdicts);
        }
    }
    Ok(verdicts_ok(&v))
}

fn print_summary(f: &LpStarFn, v: &TheoremVerdicts, digits: u32) {
    let s = v.summary;
    println!("function: {f}");
    println!("type: {}", v.kind.as_str());
    println!(
        "nonreal zeros: phi {}, phi' {}; real zeros: Q {}, Q1 {}; extra zeros of phi': {}",
        s.two_m, s.two_m1, s.zr_q, s.zr_q1, s.extra
    );
    println!("property A: {}", if v.property_a.overall { "holds" } else { "fails" });
    for z in &v.property_a.per_zero {
        let (lo, hi) = z.alpha.decimal_enclosure(digits);
        println!(
            "  zero in [{lo}, {hi}] (multiplicity {}): left {}, right {}",
            z.multiplicity,
            if z.left_clear { "clear" } else { "has Q zeros" },
            if z.right_clear { "clear" } else { "has Q zeros" },
        );
    }
    println!("Z(Q) <= 2m: {}", v.hawaii);
    println!("Z(Q) >= 2m - 2m1: {}", v.prop1);
    println!("two-sided bound: {}", bound(&v.theorem2));
    println!("type bound: {}", bound(&v.type_theorem));
    if let Some(r) = &v.shift {
        print_shift(r, digits);
    }
}

fn print_shift(r: &ShiftResult, digits: u32) {
    let (lo, hi) = r.sigma_star.decimal_enclosure(digits);
    match r.sigma_star.as_rational() {
        Some(x) => println!("sigma*: {x} (exact)"),
        None => println!("sigma*: root of {} in [{lo}, {hi}]", r.sigma_star.poly()),
    }
    println!(
        "after shift: property A {}, nonreal zeros of the derivative {} (before {})",
        if r.property_a_after { "holds" } else { "fails" },
        r.zc_psi_prime,
        r.zc_phi
    );
    if let Some(p) = &r.psi_prime_part {
        println!("polynomial part of psi*': {p}");
    }
}

#[derive(Serialize)]
struct CheckJson<'a> {
    name: &'a str,
    verdict: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    detail: Option<String>,
}

#[derive(Serialize)]
struct VerifyJson<'a> {
    function: FunctionJson,
    counts: CountsJson,
    property_a: bool,
    checks: Vec<CheckJson<'a>>,
    passed: bool,
}

fn verify(expr: &str, check: Check, json: bool) -> Outcome {
    let f = parse_fn(expr)?;
    let an = f.analyze()?;
    let v = TheoremVerdicts::from_analysis(&an)?;
    let mut checks: Vec<CheckJson> = Vec::new();
    let push = |checks: &mut Vec<CheckJson>, name, verdict: Verdict, detail: Option<String>| {
        checks.push(CheckJson {
            name,
            verdict: verdict.as_str(),
            detail,
        })
    };
    let all = matches!(check, Check::All);
    if all || matches!(check, Check::Hawaii) {
        push(
            &mut checks,
            "hawaii",
            v.hawaii,
            Some(format!("Z(Q) = {}, 2m = {}", v.summary.zr_q, v.summary.two_m)),
        );
    }
    if all || matches!(check, Check::Theorem2) {
        push(&mut checks, "prop1", v.prop1, None);
        push(&mut checks, "theorem2", v.theorem2.verdict, Some(bound(&v.theorem2)));
    }
    if all || matches!(check, Check::Type) {
        push(
            &mut checks,
            "type_theorem",
            v.type_theorem.verdict,
            Some(bound(&v.type_theorem)),
        );
    }
    let ledger: Vec<LedgerEntry> = if all || matches!(check, Check::Lemmas) {
        ledger_for(&an)?
    } else {
        Vec::new()
    };
    for e in &ledger {
        push(&mut checks, e.name, e.verdict, e.detail.clone());
    }
    if all {
        if let Some(r) = &v.shift {
            let detail = format!(
                "zc {} -> {}, property A after: {}",
                r.zc_phi, r.zc_psi_prime, r.property_a_after
            );
            push(&mut checks, "shift", Verdict::from_bool(shift_ok(r)), Some(detail));
        }
    }
    let passed = !checks.iter().any(|c| c.verdict == Verdict::Fail.as_str());
    if json {
        print_json(&VerifyJson {
            function: (&f).into(),
            counts: v.summary.into(),
            property_a: v.property_a.overall,
            checks,
            passed,
        })?;
    } else {
        println!(
            "{f}: Z(Q) = {}, 2m = {}, property A {}",
            v.summary.zr_q,
            v.summary.two_m,
            if v.property_a.overall { "holds" } else { "fails" }
        );
        for c in &checks {
            match &c.detail {
                Some(d) if c.verdict != Verdict::NotApplicable.as_str() => println!("{}: {} ({d})", c.name, c.verdict),
                _ => println!("{}: {}", c.name, c.verdict),
            }
        }
    }
    Ok(passed)
}

#[derive(Serialize)]
struct ShiftOutput {
    function: FunctionJson,
    trivial: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    shift: Option<ShiftJson>,
    /// Verdicts on `ψ*` itself, when `σ*` is rational.
    #[serde(skip_serializing_if = "Option::is_none")]
    after: Option<AnalysisReport>,
}

fn shift(expr: &str, digits: u32, json: bool) -> Outcome {
    let f = parse_fn(expr)?;
    let v = hawaii_verdict(&f)?;
    let Some(r) = &v.shift else {
        if json {
            print_json(&ShiftOutput {
                function: (&f).into(),
                trivial: true,
                shift: None,
                after: None,
            })?;
        } else {
            println!("{f}: Q has no real zeros; property A holds and no shift is needed");
        }
        return Ok(true);
    };
    let psi = r.sigma_star.as_rational().map(|s| f.shift_by_rational(s));
    let after = match &psi {
        Some(psi) => Some((psi.clone(), hawaii_verdict(psi)?)),
        None => None,
    };
    let ok = shift_ok(r) && after.as_ref().is_none_or(|(_, v)| v.all_pass() && v.property_a.overall);
    if json {
        print_json(&ShiftOutput {
            function: (&f).into(),
            trivial: false,
            shift: Some(ShiftJson::new(r, digits)),
            after: after.as_ref().map(|(psi, v)| AnalysisReport::new(psi, v, digits)),
        })?;
    } else {
        println!("function: {f}");
        let (lo, hi) = r.sigma_star.decimal_enclosure(digits);
        println!("sigma* minimal polynomial: {}", r.sigma_star.poly());
        println!(
            "sigma* isolating interval: [{}, {}]",
            exact_decimal(r.sigma_star.lo()),
            exact_decimal(r.sigma_star.hi())
        );
        println!("sigma* enclosure: [{lo}, {hi}]");
        print_shift(r, digits);
        if let Some((psi, v)) = &after {
            println!("psi*: {psi}");
            println!(
                "psi* verdicts: property A {}, Z(Q) <= 2m {}, two-sided bound {}, type bound {}",
                if v.property_a.overall { "holds" } else { "fails" },
                v.hawaii,
                v.theorem2.verdict,
                v.type_theorem.verdict
            );
        }
    }
    Ok(ok)
}

#[derive(Serialize)]
struct RootJson {
    root: AlgebraicJson,
    multiplicity: usize,
}

fn isolate(poly: &str, from: Option<&str>, to: Option<&str>, digits: u32, json: bool) -> Outcome {
    let p = parse_poly(poly)?;
    let bound = |s: Option<&str>| -> Result<Option<AlgebraicNumber>, Failure> {
        Ok(match s {
            Some(s) => Some(AlgebraicNumber::rational(parse_ratio(s)?)),
            None => None,
        })
    };
    let (lo, hi) = (bound(from)?, bound(to)?);
    if let (Some(l), Some(h)) = (&lo, &hi) {
        if compare(l, h).is_gt() {
            return Err(Failure("--from must not exceed --to".into()));
        }
    }
    let roots: Vec<(AlgebraicNumber, usize)> = isolate_roots(&p)?
        .into_roots()
        .into_iter()
        .filter(|(x, _)| {
            lo.as_ref().is_none_or(|l| compare(l, x).is_le()) && hi.as_ref().is_none_or(|h| compare(x, h).is_le())
        })
        .collect();
    if json {
        let out: Vec<RootJson> = roots
            .iter()
            .map(|(x, m)| RootJson {
                root: AlgebraicJson::new(x, digits),
                multiplicity: *m,
            })
            .collect();
        print_json(&out)?;
    } else {
        let total: usize = roots.iter().map(|r| r.1).sum();
        println!("{} distinct real zeros, {total} with multiplicity", roots.len());
        for (x, m) in &roots {
            let (a, b) = x.decimal_enclosure(digits);
            println!(
                "[{}, {}] multiplicity {m}, in [{a}, {b}]",
                exact_decimal(x.lo()),
                exact_decimal(x.hi())
            );
        }
    }
    Ok(true)
}

#[derive(Serialize)]
struct FuzzOutput {
    passed: bool,
    reports: Vec<FuzzReport>,
}

fn fuzz(profile: Profile, count: usize, seed: Option<u64>, degree_max: usize, jobs: Option<usize>) -> Outcome {
    let seed = match seed {
        Some(s) => s,
        None => match std::env::var("HAWAII_SEED") {
            Ok(s) => s
                .trim()
                .parse()
                .map_err(|_| Failure(format!("HAWAII_SEED is not an integer: {s:?}")))?,
            Err(_) => 0,
        },
    };
    if degree_max == 0 {
        return Err(Failure("--degree-max must be positive".into()));
    }
    let reports: Vec<FuzzReport> = profile
        .kinds()
        .into_iter()
        .map(|kind| {
            let mut cfg = FuzzConfig::new(kind, count, seed, degree_max);
            cfg.jobs = jobs;
            run_fuzz(&cfg)
        })
        .collect();
    let passed = reports.iter().all(FuzzReport::passed);
    print_json(&FuzzOutput { passed, reports })?;
    Ok(passed)
}
