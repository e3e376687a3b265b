//! Named, seeded reproduction experiments with structured reports.

mod experiments;
mod nested;

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::arith::ArithError;
use crate::bases::BasisError;
use crate::diffop::{DiffOpError, DEFAULT_PRECISION_BITS};
use crate::multseq::MultSeqError;
use crate::roots::RootsError;

pub use experiments::REGISTRY;
pub use nested::{
    case3_discriminants, case_transform, geometric_transform, quadratic_transform_general,
    NestedCase,
};

pub const SUITE_NAME: &str = "mulseq-repro";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
pub const DEFAULT_SEED: u64 = 42;

#[derive(Debug, Error)]
pub enum ReproError {
    #[error("unknown experiment `{0}`")]
    UnknownId(String),
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Basis(#[from] BasisError),
    #[error(transparent)]
    Roots(#[from] RootsError),
    #[error(transparent)]
    MultSeq(#[from] MultSeqError),
    #[error(transparent)]
    DiffOp(#[from] DiffOpError),
}

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    /// Quoted from the source text.
    Paper,
    /// Follows from definitions alone.
    Trivial,
    /// Checked against an independent computation.
    Derived,
}

impl Provenance {
    pub fn tag(self) -> &'static str {
        match self {
            Provenance::Paper => "paper",
            Provenance::Trivial => "trivial",
            Provenance::Derived => "derived",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Tolerance {
    Exact,
    /// Decimal values quoted to this many places, matched within half a
    /// unit in the last place beyond them.
    Decimals(u32),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ReportStatus {
    Match,
    Mismatch,
    Error,
}

impl fmt::Display for ReportStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ReportStatus::Match => "match",
            ReportStatus::Mismatch => "mismatch",
            ReportStatus::Error => "error",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub id: String,
    pub status: ReportStatus,
    pub computed: BTreeMap<String, String>,
    pub expected: BTreeMap<String, String>,
    pub provenance: Provenance,
    pub seed: u64,
    pub ms: u64,
    pub report_only: bool,
    /// Keys whose computed value disagreed with the expected one.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub mismatched: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl Report {
    /// The report with its timing zeroed, for comparing reruns.
    pub fn untimed(&self) -> Report {
        Report { ms: 0, ..self.clone() }
    }

    pub fn gates(&self) -> bool {
        !self.report_only
    }
}

/// Computed values of one run, each with the value it should have.
#[derive(Debug, Default)]
pub struct Findings {
    items: Vec<Finding>,
}

#[derive(Debug)]
struct Finding {
    key: String,
    computed: String,
    expected: Option<String>,
    ok: bool,
}

impl Findings {
    /// A comparison decided by the caller (used for tolerances).
    pub fn check(&mut self, key: &str, computed: impl fmt::Display, expected: impl fmt::Display, ok: bool) {
        self.items.push(Finding {
            key: key.to_string(),
            computed: computed.to_string(),
            expected: Some(expected.to_string()),
            ok,
        });
    }

    /// Matches when both sides print identically; values are exact, so
    /// their canonical text is their identity.
    pub fn exact(&mut self, key: &str, computed: impl fmt::Display, expected: impl fmt::Display) {
        let (c, e) = (computed.to_string(), expected.to_string());
        let ok = c == e;
        self.check(key, c, e, ok);
    }

    /// Recorded without an expectation.
    pub fn fact(&mut self, key: &str, computed: impl fmt::Display) {
        self.items.push(Finding {
            key: key.to_string(),
            computed: computed.to_string(),
            expected: None,
            ok: true,
        });
    }
}

/// Settings shared by every experiment of a run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RunContext {
    pub seed: u64,
    pub precision_bits: usize,
}

impl RunContext {
    pub fn new(seed: u64) -> Self {
        RunContext {
            seed,
            precision_bits: DEFAULT_PRECISION_BITS,
        }
    }

    pub fn with_precision(mut self, bits: usize) -> Self {
        self.precision_bits = bits;
        self
    }
}

pub struct Experiment {
    pub id: &'static str,
    pub description: &'static str,
    pub provenance: Provenance,
    pub tolerance: Tolerance,
    pub tags: &'static [&'static str],
    /// Operations the procedure exercises.
    pub ops: &'static [&'static str],
    /// Evidence only: never fails a suite.
    pub report_only: bool,
    pub(crate) run: fn(&RunContext, &mut Findings) -> Result<(), ReproError>,
}

impl Experiment {
    /// True when `filter` is empty or names this experiment, its
    /// provenance, or one of its tags.
    pub fn matches(&self, filter: &[String]) -> bool {
        filter.is_empty()
            || filter.iter().any(|f| {
                f == self.id || f == self.provenance.tag() || self.tags.contains(&f.as_str())
            })
    }

    pub fn execute(&self, ctx: &RunContext) -> Report {
        let start = Instant::now();
        let mut findings = Findings::default();
        let result = (self.run)(ctx, &mut findings);
        let ms = start.elapsed().as_millis() as u64;
        let mut computed = BTreeMap::new();
        let mut expected = BTreeMap::new();
        let mut mismatched = Vec::new();
        for f in findings.items {
            if !f.ok {
                mismatched.push(f.key.clone());
            }
            if let Some(e) = f.expected {
                expected.insert(f.key.clone(), e);
            }
            computed.insert(f.key, f.computed);
        }
        let (status, error) = match result {
            Err(e) => (ReportStatus::Error, Some(format!("{}: {e}", self.id))),
            Ok(()) if mismatched.is_empty() => (ReportStatus::Match, None),
            Ok(()) => (ReportStatus::Mismatch, None),
        };
        Report {
            id: self.id.to_string(),
            status,
            computed,
            expected,
            provenance: self.provenance,
            seed: ctx.seed,
            ms,
            report_only: self.report_only,
            mismatched,
            error,
        }
    }
}

pub fn find_experiment(id: &str) -> Option<&'static Experiment> {
    REGISTRY.iter().find(|e| e.id == id)
}

pub fn run_experiment(id: &str, seed: u64) -> Result<Report, ReproError> {
    run_experiment_with(id, &RunContext::new(seed))
}

pub fn run_experiment_with(id: &str, ctx: &RunContext) -> Result<Report, ReproError> {
    let exp = find_experiment(id).ok_or_else(|| ReproError::UnknownId(id.to_string()))?;
    Ok(exp.execute(ctx))
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Totals {
    pub experiments: usize,
    pub matched: usize,
    pub mismatched: usize,
    pub errors: usize,
    /// Of the above, how many were report-only.
    pub report_only: usize,
    /// Mismatches and errors among gating experiments.
    pub gating_failures: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub version: String,
    pub totals: Totals,
    pub reports: Vec<Report>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.totals.gating_failures == 0
    }

    pub fn has_errors(&self) -> bool {
        self.reports
            .iter()
            .any(|r| r.gates() && r.status == ReportStatus::Error)
    }
}

pub fn run_suite(filter: &[String], seed: u64) -> SuiteReport {
    run_suite_with(filter, &RunContext::new(seed))
}

/// Runs every matching experiment concurrently; reports come back in
/// registry order.
pub fn run_suite_with(filter: &[String], ctx: &RunContext) -> SuiteReport {
    let reports: Vec<Report> = REGISTRY
        .par_iter()
        .filter(|e| e.matches(filter))
        .map(|e| e.execute(ctx))
        .collect();
    let mut totals = Totals {
        experiments: reports.len(),
        ..Totals::default()
    };
    for r in &reports {
        match r.status {
            ReportStatus::Match => totals.matched += 1,
            ReportStatus::Mismatch => totals.mismatched += 1,
            ReportStatus::Error => totals.errors += 1,
        }
        if r.report_only {
            totals.report_only += 1;
        } else if r.status != ReportStatus::Match {
            totals.gating_failures += 1;
        }
    }
    SuiteReport {
        suite: SUITE_NAME.to_string(),
        version: VERSION.to_string(),
        totals,
        reports,
    }
}

/// Both nested-discriminant sign arguments for quadratic sequences off
/// `α = 1`, as a report.
pub fn case12_nested_discriminants(case: NestedCase) -> Report {
    let id = match case {
        NestedCase::One => "case1",
        NestedCase::Two => "case2",
    };
    find_experiment(id).expect("registered").execute(&RunContext::new(0))
}

pub fn case3_thresholds() -> Report {
    find_experiment("case3-thresholds")
        .expect("registered")
        .execute(&RunContext::new(0))
}

/// Public operations the registry is expected to exercise.
pub const OPERATIONS: &[&str] = &[
    "poly_arith",
    "derivative",
    "divrem",
    "gcd_squarefree",
    "series_mul_truncate",
    "basis_poly",
    "expand_in_basis",
    "rodrigues_check",
    "orthogonality_integral",
    "legendre_ode_residual",
    "parity_reflect",
    "sturm_count",
    "is_real_rooted",
    "isolate_roots",
    "interlace_check",
    "resultant",
    "discriminant",
    "classify_cubic",
    "classify_quartic",
    "apply_operator",
    "classical_ms_test",
    "quadratic_classical_region",
    "basis_ms_test",
    "structural_checks",
    "classify_quadratic_legendre",
    "max_b_search",
    "to_diffop",
    "symbol",
    "quadratic_symbol_roots",
    "bb_falsify",
    "run_experiment",
    "run_suite",
    "case12_nested_discriminants",
    "case3_thresholds",
];

/// Operations that are exercised by the harness itself rather than by a
/// single experiment.
pub const HARNESS_OPERATIONS: &[&str] = &["run_experiment", "run_suite"];

/// Operations in [`OPERATIONS`] that no registered experiment exercises.
pub fn uncovered_operations() -> Vec<&'static str> {
    OPERATIONS
        .iter()
        .copied()
        .filter(|op| {
            !HARNESS_OPERATIONS.contains(op) && !REGISTRY.iter().any(|e| e.ops.contains(op))
        })
        .collect()
}
