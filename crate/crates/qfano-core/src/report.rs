//! Run configuration, parallel execution and report output.
//!
//! A [`RunConfig`] selects checks and classes; [`run`] validates the
//! selection before doing any work, executes the checks on a bounded
//! thread pool and collects the results in check-id order, so the report
//! content is independent of completion order.

use crate::catalog::{catalog, Catalog, CLASS_NUMBERS};
use crate::graded::{class_summary, ClassSummary};
use crate::verifier::{registry, run_check, CheckResult, CheckSpec, CheckStatus, GROUPS};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::time::{Duration, Instant};
use thiserror::Error;

/// Default number of samples per randomized check.
pub const DEFAULT_SAMPLES: usize = 100;

/// Order to which class Hilbert series are expanded in reports.
pub const SUMMARY_ORDER: i64 = 12;

/// Output format.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Text,
    Json,
}

/// What to run and how.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    pub master_seed: u64,
    /// Samples per randomized check; at least 1.
    pub samples: usize,
    /// Restrict to these check ids.
    pub only: Option<Vec<String>>,
    /// Restrict per-class checks and summaries to these classes.
    pub classes: Option<Vec<u32>>,
    pub format: Format,
    /// Worker threads; at least 1.
    pub parallelism: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            master_seed: 42,
            samples: DEFAULT_SAMPLES,
            only: None,
            classes: None,
            format: Format::Text,
            parallelism: std::thread::available_parallelism().map_or(1, |n| n.get()),
        }
    }
}

/// Configuration errors, raised before any check runs.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum UsageError {
    #[error("unknown check id `{0}`")]
    UnknownCheck(String),
    #[error("unknown class No.{0} (known: 308, 501, 512, 550, 872, 577, 878, 1766)")]
    UnknownClass(u32),
    #[error("{0} must be at least 1")]
    NonPositive(&'static str),
    #[error("the selection contains no checks")]
    Empty,
}

/// The outcome of a run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub version: String,
    pub config: RunConfig,
    /// Sorted by check id.
    pub results: Vec<CheckResult>,
    /// Graded summaries of the selected classes, by class number.
    pub classes: Vec<ClassSummary>,
    pub total_elapsed: Duration,
}

impl RunConfig {
    /// Validates the configuration and resolves the selected checks.
    pub fn selection(&self) -> Result<Vec<CheckSpec>, UsageError> {
        if self.samples == 0 {
            return Err(UsageError::NonPositive("samples"));
        }
        if self.parallelism == 0 {
            return Err(UsageError::NonPositive("parallelism"));
        }
        if let Some(cs) = &self.classes {
            if let Some(n) = cs.iter().find(|n| !CLASS_NUMBERS.contains(n)) {
                return Err(UsageError::UnknownClass(*n));
            }
        }
        let all = registry();
        let mut picked: Vec<CheckSpec> = match &self.only {
            None => all,
            Some(ids) => {
                let wanted: BTreeSet<&str> = ids.iter().map(String::as_str).collect();
                if let Some(bad) = wanted.iter().find(|id| !all.iter().any(|s| s.id == **id)) {
                    return Err(UsageError::UnknownCheck(bad.to_string()));
                }
                all.into_iter().filter(|s| wanted.contains(s.id.as_str())).collect()
            }
        };
        if let Some(cs) = &self.classes {
            picked.retain(|s| s.class.is_none_or(|n| cs.contains(&n)));
        }
        if picked.is_empty() {
            return Err(UsageError::Empty);
        }
        Ok(picked)
    }

    fn selected_classes(&self) -> Vec<u32> {
        let mut cs: Vec<u32> = self.classes.clone().unwrap_or_else(|| CLASS_NUMBERS.to_vec());
        cs.sort_unstable();
        cs.dedup();
        cs
    }
}

/// Runs the configured checks against the shared catalog.
pub fn run(config: &RunConfig) -> Result<Report, UsageError> {
    run_with(config, catalog())
}

/// Runs the configured checks against `cat` (used to run the suite on
/// perturbed catalogs).
pub fn run_with(config: &RunConfig, cat: &Catalog) -> Result<Report, UsageError> {
    let picked = config.selection()?;
    let start = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.parallelism)
        .build()
        .expect("thread pool");
    let mut results: Vec<CheckResult> = pool.install(|| {
        picked
            .par_iter()
            .map(|s| run_check(&s.id, cat, config.master_seed, config.samples).expect("registered id"))
            .collect()
    });
    results.sort_by(|a, b| a.id.cmp(&b.id));
    let classes = config
        .selected_classes()
        .into_iter()
        .filter_map(|n| cat.class(n).ok())
        .filter_map(|c| class_summary(c, SUMMARY_ORDER).ok())
        .collect();
    Ok(Report {
        version: env!("CARGO_PKG_VERSION").to_string(),
        config: config.clone(),
        results,
        classes,
        total_elapsed: start.elapsed(),
    })
}

impl Report {
    /// True iff no check failed (skipped checks do not count as failures).
    pub fn all_pass(&self) -> bool {
        self.results.iter().all(|r| r.status != CheckStatus::Fail)
    }

    /// The failed results.
    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.results.iter().filter(|r| r.status == CheckStatus::Fail)
    }

    /// The result of check `id`.
    pub fn result(&self, id: &str) -> Option<&CheckResult> {
        self.results.iter().find(|r| r.id == id)
    }

    /// The same report with every duration zeroed, for byte comparisons.
    pub fn without_timings(&self) -> Report {
        let mut r = self.clone();
        r.total_elapsed = Duration::ZERO;
        for c in &mut r.results {
            c.elapsed = Duration::ZERO;
        }
        r
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> Result<Report, serde_json::Error> {
        serde_json::from_str(s)
    }

    /// Renders in the configured format.
    pub fn emit(&self) -> String {
        match self.config.format {
            Format::Text => self.to_text(),
            Format::Json => self.to_json(),
        }
    }

    /// Human-readable report grouped by topic.
    pub fn to_text(&self) -> String {
        let specs = registry();
        let mut out = String::new();
        let c = &self.config;
        let _ = writeln!(out, "qfano {} — seed {}, {} samples", self.version, c.master_seed, c.samples);
        for group in GROUPS {
            let rows: Vec<(&CheckResult, &CheckSpec)> = self
                .results
                .iter()
                .filter_map(|r| specs.iter().find(|s| s.id == r.id).map(|s| (r, s)))
                .filter(|(_, s)| s.group == group)
                .collect();
            if rows.is_empty() {
                continue;
            }
            let _ = writeln!(out, "\n## {group}");
            for (r, s) in rows {
                let status = match r.status {
                    CheckStatus::Pass => "PASS",
                    CheckStatus::Fail => "FAIL",
                    CheckStatus::Skipped => "SKIP",
                };
                let _ = write!(out, "{status}  {:<32} {}", r.id, s.title);
                if r.samples_used > 0 {
                    let _ = write!(out, " [{} samples]", r.samples_used);
                }
                let _ = writeln!(out, " ({:.3} s)", r.elapsed.as_secs_f64());
                if let Some(w) = &r.witness {
                    let _ = writeln!(out, "      {w}");
                }
            }
        }
        if !self.classes.is_empty() {
            let _ = writeln!(out, "\n## Class summaries");
            for s in &self.classes {
                let a = &s.adjunction;
                let _ = writeln!(
                    out,
                    "No.{:<5} δ={:<3} k={:<3} degrees={:?} genus={} K_X=O({}){}",
                    s.number,
                    s.delta,
                    s.k,
                    s.degrees,
                    s.genus,
                    a.x_degree,
                    if a.cone_k_discrepancy { "  [cone: δ−Σw(Π¹⁴) = −(k+1)]" } else { "" }
                );
            }
        }
        let pass = self.results.iter().filter(|r| r.status == CheckStatus::Pass).count();
        let fail = self.failures().count();
        let skip = self.results.len() - pass - fail;
        let _ = writeln!(
            out,
            "\n{pass} passed, {fail} failed, {skip} skipped in {:.3} s",
            self.total_elapsed.as_secs_f64()
        );
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn only(ids: &[&str]) -> RunConfig {
        RunConfig { only: Some(ids.iter().map(|s| s.to_string()).collect()), parallelism: 2, ..RunConfig::default() }
    }

    #[test]
    fn unknown_ids_and_classes_are_usage_errors() {
        assert_eq!(run(&only(&["pi.nope"])).unwrap_err(), UsageError::UnknownCheck("pi.nope".into()));
        let cfg = RunConfig { classes: Some(vec![309]), ..RunConfig::default() };
        assert_eq!(run(&cfg).unwrap_err(), UsageError::UnknownClass(309));
        let cfg = RunConfig { samples: 0, ..RunConfig::default() };
        assert_eq!(run(&cfg).unwrap_err(), UsageError::NonPositive("samples"));
    }

    #[test]
    fn single_check_report_round_trips() {
        let r = run(&only(&["pi.g_decomposition"])).unwrap();
        assert_eq!(r.results.len(), 1);
        assert!(r.all_pass());
        assert_eq!(Report::from_json(&r.to_json()).unwrap(), r);
    }

    #[test]
    fn results_sorted_and_class_filter_applies() {
        let cfg = RunConfig { classes: Some(vec![308]), ..only(&["graded.numerator.308", "graded.adjunction.308", "h13.fibers", "graded.numerator.501"]) };
        let r = run(&cfg).unwrap();
        let ids: Vec<&str> = r.results.iter().map(|r| r.id.as_str()).collect();
        assert_eq!(ids, ["graded.adjunction.308", "graded.numerator.308", "h13.fibers"]);
        assert_eq!(r.classes.len(), 1);
        assert!(r.to_text().contains("## Weights and Hilbert series"));
    }
}
