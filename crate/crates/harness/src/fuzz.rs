//! Seeded fuzzing of the ledger over generated instances.

use rayon::prelude::*;
use serde::Serialize;

use hawaii_core::hawaii::Verdict;

use crate::generate::{generate, instance_seed, random_profile, GenProfile, Kind};
use crate::ledger::{ledger_for, ENTRY_NAMES};
use crate::report::CountsJson;

/// Parameters of one fuzz run.
#[derive(Clone, Debug)]
pub struct FuzzConfig {
    pub kind: Kind,
    pub count: usize,
    pub seed: u64,
    pub degree_max: usize,
    /// Worker threads; `None` uses the global rayon pool.
    pub jobs: Option<usize>,
    /// Witnesses kept per entry.
    pub max_witnesses: usize,
}

impl FuzzConfig {
    pub fn new(kind: Kind, count: usize, seed: u64, degree_max: usize) -> Self {
        FuzzConfig {
            kind,
            count,
            seed,
            degree_max,
            jobs: None,
            max_witnesses: 5,
        }
    }
}

/// Pass, fail and not-applicable counts of one entry over the run.
#[derive(Clone, Debug, Default, Serialize, PartialEq, Eq)]
pub struct EntryTally {
    pub name: String,
    pub pass: usize,
    pub fail: usize,
    pub not_applicable: usize,
}

/// Everything needed to reproduce one failure.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Witness {
    pub index: usize,
    pub entry: String,
    pub profile: GenProfile,
    pub function: String,
    pub counts: Option<CountsJson>,
    pub detail: String,
}

/// Deterministic summary of a run: identical for identical configurations.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct FuzzReport {
    pub kind: Kind,
    pub seed: u64,
    pub count: usize,
    pub degree_max: usize,
    pub entries: Vec<EntryTally>,
    /// Instances whose computed counts disagree with their construction.
    pub construction_mismatches: usize,
    /// Instances that could not be generated or analysed.
    pub errors: usize,
    pub witnesses: Vec<Witness>,
}

impl FuzzReport {
    pub fn failures(&self) -> usize {
        self.entries.iter().map(|e| e.fail).sum::<usize>() + self.construction_mismatches + self.errors
    }

    pub fn passed(&self) -> bool {
        self.failures() == 0
    }
}

struct Outcome {
    verdicts: Vec<Verdict>,
    construction_ok: bool,
    error: bool,
    witnesses: Vec<Witness>,
}

fn run_one(kind: Kind, degree_max: usize, index: usize, seed: u64) -> Outcome {
    let profile = random_profile(kind, degree_max, instance_seed(seed, index as u64));
    let failed = |entry: &str, function: String, counts: Option<CountsJson>, detail: String| Witness {
        index,
        entry: entry.to_string(),
        profile: profile.clone(),
        function,
        counts,
        detail,
    };
    let g = match generate(&profile) {
        Ok(g) => g,
        Err(e) => {
            return Outcome {
                verdicts: Vec::new(),
                construction_ok: true,
                error: true,
                witnesses: vec![failed("generate", String::new(), None, e.to_string())],
            }
        }
    };
    let function = g.function.to_string();
    let analysed = g.function.analyze().and_then(|an| Ok((an.summary, ledger_for(&an)?)));
    let (summary, entries) = match analysed {
        Ok(x) => x,
        Err(e) => {
            return Outcome {
                verdicts: Vec::new(),
                construction_ok: true,
                error: true,
                witnesses: vec![failed("analyze", function, None, e.to_string())],
            }
        }
    };
    let mut witnesses = Vec::new();
    let construction_ok = summary.two_m == g.two_m() && summary.real_zeros == g.real_roots.len();
    if !construction_ok {
        let detail = format!(
            "constructed with 2m = {}, {} distinct real zeros",
            g.two_m(),
            g.real_roots.len()
        );
        witnesses.push(failed("construction", function.clone(), Some(summary.into()), detail));
    }
    for e in entries.iter().filter(|e| e.verdict.is_fail()) {
        let detail = e.detail.clone().unwrap_or_default();
        witnesses.push(failed(e.name, function.clone(), Some(summary.into()), detail));
    }
    Outcome {
        verdicts: entries.iter().map(|e| e.verdict).collect(),
        construction_ok,
        error: false,
        witnesses,
    }
}

/// Runs the ledger on `count` instances; results are reduced in index order.
pub fn run_fuzz(cfg: &FuzzConfig) -> FuzzReport {
    let work = || -> Vec<Outcome> {
        (0..cfg.count)
            .into_par_iter()
            .map(|i| run_one(cfg.kind, cfg.degree_max, i, cfg.seed))
            .collect()
    };
    let outcomes = match cfg.jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map(|pool| pool.install(work))
            .unwrap_or_else(|_| work()),
        None => work(),
    };

    let mut entries: Vec<EntryTally> = ENTRY_NAMES
        .iter()
        .map(|n| EntryTally {
            name: n.to_string(),
            ..Default::default()
        })
        .collect();
    let mut report = FuzzReport {
        kind: cfg.kind,
        seed: cfg.seed,
        count: cfg.count,
        degree_max: cfg.degree_max,
        entries: Vec::new(),
        construction_mismatches: 0,
        errors: 0,
        witnesses: Vec::new(),
    };
    for o in outcomes {
        report.errors += usize::from(o.error);
        report.construction_mismatches += usize::from(!o.construction_ok);
        for (t, v) in entries.iter_mut().zip(&o.verdicts) {
            match v {
                Verdict::Pass => t.pass += 1,
                Verdict::Fail => t.fail += 1,
                Verdict::NotApplicable => t.not_applicable += 1,
            }
        }
        for w in o.witnesses {
            let kept = report.witnesses.iter().filter(|x| x.entry == w.entry).count();
            if kept < cfg.max_witnesses {
                report.witnesses.push(w);
            }
        }
    }
    report.entries = entries;
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_across_thread_counts() {
        let mut cfg = FuzzConfig::new(Kind::ExpLinear, 12, 99, 6);
        cfg.jobs = Some(1);
        let a = run_fuzz(&cfg);
        cfg.jobs = Some(4);
        let b = run_fuzz(&cfg);
        assert_eq!(a, b);
        assert!(a.passed(), "{:?}", a.witnesses);
    }
}
