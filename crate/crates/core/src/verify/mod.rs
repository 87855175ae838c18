//! Exhaustive verification sweeps.
//!
//! Each check returns a [`SweepReport`]: how many parameter cases it ran
//! against how many the declared grid contains, and a failure record with the
//! offending parameters for every case that did not hold. Failures are data,
//! never errors.
//!
//! Cases run in parallel on the ambient rayon pool and are collected in
//! parameter order, so reports do not depend on the thread count.

mod dihedral;
mod fixtures;

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::SCHEMA_VERSION;

pub use dihedral::{
    check_adjacency_formulas, check_dihedral_identities, check_near_reflection_cases,
    check_near_reflection_sweep, check_reflection_bijection, check_reflection_bijection_sweep,
    check_rotation_cycles, check_rotation_cycles_sweep, check_s1_family, check_s2_family,
    check_theta_isomorphism, check_theta_sweep, dihedral_partition, DihedralPartition,
};
pub use fixtures::{check_circulants, check_named_examples, named_fixtures, NamedFixture};

/// One failed case.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub params: BTreeMap<String, usize>,
    pub detail: String,
}

impl Failure {
    pub fn new(params: &[(&str, usize)], detail: impl Into<String>) -> Self {
        Self {
            params: params.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
            detail: detail.into(),
        }
    }
}

/// Outcome of one verification sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub check: String,
    /// Human-readable description of the swept parameter grid.
    pub grid: String,
    /// Size of the grid, computed independently of the enumeration.
    pub declared_cases: u64,
    pub cases_run: u64,
    pub failures: Vec<Failure>,
    pub notes: Vec<String>,
    /// Wall-clock time; excluded from serialized output so reports stay reproducible.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.cases_run == self.declared_cases
    }

    /// Concatenates reports of the same check over different parameters.
    pub fn merge(check: &str, grid: String, parts: Vec<SweepReport>) -> Self {
        let mut out = SweepReport {
            check: check.to_string(),
            grid,
            declared_cases: 0,
            cases_run: 0,
            failures: Vec::new(),
            notes: Vec::new(),
            elapsed: Duration::ZERO,
        };
        for p in parts {
            out.declared_cases += p.declared_cases;
            out.cases_run += p.cases_run;
            out.failures.extend(p.failures);
            out.notes.extend(p.notes);
            out.elapsed += p.elapsed;
        }
        out
    }
}

/// Runs `case` over `params` in parallel and assembles a report in parameter order.
pub(crate) fn run_cases<P, F>(
    check: &str,
    grid: String,
    declared_cases: u64,
    params: Vec<P>,
    case: F,
) -> SweepReport
where
    P: Send + Sync,
    F: Fn(&P) -> CaseOutcome + Send + Sync,
{
    let start = Instant::now();
    let outcomes: Vec<CaseOutcome> = params.par_iter().map(&case).collect();
    let mut report = SweepReport {
        check: check.to_string(),
        grid,
        declared_cases,
        cases_run: 0,
        failures: Vec::new(),
        notes: Vec::new(),
        elapsed: Duration::ZERO,
    };
    for o in outcomes {
        report.cases_run += o.cases;
        report.failures.extend(o.failures);
    }
    report.elapsed = start.elapsed();
    report
}

/// Result of evaluating one parameter tuple, which may cover several cases.
#[derive(Debug, Default)]
pub(crate) struct CaseOutcome {
    pub cases: u64,
    pub failures: Vec<Failure>,
}

impl CaseOutcome {
    pub fn single(failure: Option<Failure>) -> Self {
        Self {
            cases: 1,
            failures: failure.into_iter().collect(),
        }
    }
}

/// Names accepted by [`run_check`], in the order [`run_all`] runs them.
pub const CHECK_NAMES: &[&str] = &[
    "dihedral-identities",
    "adjacency-formulas",
    "s1-family",
    "s2-family",
    "theta-isomorphism",
    "rotation-cycles",
    "near-reflection",
    "reflection-bijection",
    "named-examples",
    "circulant",
];

/// Bounds for a full verification run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Largest `n` for the dihedral family sweeps.
    pub max_n: usize,
    /// Largest `n` for the explicit isomorphism check.
    pub theta_max_n: usize,
    /// Largest `n` for the group identity checks.
    pub identities_max_n: usize,
    pub circulant_samples: usize,
    pub circulant_max_n: usize,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self::with_max_n(64)
    }
}

impl VerifyConfig {
    /// Derives the secondary bounds from `max_n`: identities go to `2 * max_n`,
    /// the isomorphism and circulant sweeps stop at 40.
    pub fn with_max_n(max_n: usize) -> Self {
        Self {
            max_n,
            theta_max_n: max_n.min(40),
            identities_max_n: 2 * max_n,
            circulant_samples: 50,
            circulant_max_n: max_n.min(40),
            seed: 0x5EED,
        }
    }
}

/// Runs the named check, or `None` for an unknown name.
pub fn run_check(name: &str, cfg: &VerifyConfig) -> Option<Result<SweepReport>> {
    let n_range = 3..=cfg.max_n;
    let report = match name {
        "dihedral-identities" => Ok(check_dihedral_identities(cfg.identities_max_n)),
        "adjacency-formulas" => Ok(check_adjacency_formulas(n_range)),
        "s1-family" => Ok(check_s1_family(n_range)),
        "s2-family" => Ok(check_s2_family(n_range)),
        "theta-isomorphism" => Ok(check_theta_sweep(3..=cfg.theta_max_n)),
        "rotation-cycles" => Ok(check_rotation_cycles_sweep(n_range)),
        "near-reflection" => Ok(check_near_reflection_sweep(n_range)),
        "reflection-bijection" => Ok(check_reflection_bijection_sweep(n_range)),
        "named-examples" => check_named_examples(),
        "circulant" => Ok(check_circulants(
            3..=cfg.circulant_max_n.max(3),
            cfg.circulant_samples,
            cfg.seed,
        )),
        _ => return None,
    };
    Some(report)
}

pub fn run_all(cfg: &VerifyConfig) -> Result<Vec<SweepReport>> {
    CHECK_NAMES
        .iter()
        .map(|name| run_check(name, cfg).expect("listed check exists"))
        .collect()
}

/// The JSON document written by `verify --format json`.
#[derive(Debug, Serialize)]
pub struct VerifyDocument<'a> {
    pub schema_version: &'static str,
    pub passed: bool,
    pub reports: &'a [SweepReport],
}

impl<'a> VerifyDocument<'a> {
    pub fn new(reports: &'a [SweepReport]) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            passed: reports.iter().all(SweepReport::passed),
            reports,
        }
    }
}

fn trim_line_end(out: &mut String) {
    out.truncate(out.trim_end_matches(' ').len());
    out.push('\n');
}

/// Fixed-width pass/fail table with failure details underneath.
pub fn render_table(reports: &[SweepReport], timings: bool) -> String {
    let mut out = String::new();
    let _ = write!(
        out,
        "{:<22} {:>10} {:>10} {:>9}  {:<6}",
        "check", "cases", "declared", "failures", "result"
    );
    if timings {
        let _ = write!(out, " {:>10}", "seconds");
    }
    trim_line_end(&mut out);
    for r in reports {
        let _ = write!(
            out,
            "{:<22} {:>10} {:>10} {:>9}  {:<6}",
            r.check,
            r.cases_run,
            r.declared_cases,
            r.failures.len(),
            if r.passed() { "PASS" } else { "FAIL" }
        );
        if timings {
            let _ = write!(out, " {:>10.3}", r.elapsed.as_secs_f64());
        }
        trim_line_end(&mut out);
    }
    for r in reports {
        for note in &r.notes {
            let _ = writeln!(out, "note [{}]: {note}", r.check);
        }
        for f in r.failures.iter().take(20) {
            let params: Vec<String> = f.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            let _ = writeln!(
                out,
                "failure [{}] {}: {}",
                r.check,
                params.join(" "),
                f.detail
            );
        }
        if r.failures.len() > 20 {
            let _ = writeln!(
                out,
                "failure [{}] ... {} more",
                r.check,
                r.failures.len() - 20
            );
        }
    }
    let passed = reports.iter().filter(|r| r.passed()).count();
    let _ = writeln!(out, "{passed}/{} checks passed", reports.len());
    out
}
