//! Acceptance gate: one pass/fail line per criterion, each run at seed 42
//! with 100 samples per randomized check and timed against its budget.
//!
//! Run with `cargo test -p qfano-core --test acceptance -- --nocapture` to
//! see the lines.

mod common;

use qfano_core::catalog::{fano_class, CLASS_NUMBERS};
use qfano_core::graded::degree_data;
use qfano_core::report::{run, RunConfig};
use qfano_core::verifier::{registry, SECTION_DRAWS};
use qfano_core::CheckStatus;
use std::time::{Duration, Instant};

const SEED: u64 = 42;
const SAMPLES: usize = 100;

struct Outcome {
    ok: bool,
    detail: String,
}

/// Runs the listed checks; all must pass, each randomized one with at least
/// `min_samples` samples.
fn checks(ids: &[String], min_samples: usize) -> Outcome {
    let cfg = RunConfig { master_seed: SEED, samples: SAMPLES, only: Some(ids.to_vec()), ..RunConfig::default() };
    let report = run(&cfg).expect("valid selection");
    let mut bad = Vec::new();
    for r in &report.results {
        if r.status != CheckStatus::Pass {
            bad.push(format!("{}: {:?} {}", r.id, r.status, r.witness.clone().unwrap_or_default()));
        } else if r.samples_used < min_samples {
            bad.push(format!("{}: only {} samples", r.id, r.samples_used));
        }
    }
    if report.results.len() != ids.len() {
        bad.push(format!("{} of {} checks ran", report.results.len(), ids.len()));
    }
    Outcome { ok: bad.is_empty(), detail: if bad.is_empty() { format!("{} checks", ids.len()) } else { bad.join("; ") } }
}

fn ids(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

fn with_prefix(prefix: &str) -> Vec<String> {
    registry().into_iter().map(|s| s.id).filter(|id| id.starts_with(prefix)).collect()
}

fn criterion_5() -> Outcome {
    let mut out = checks(&with_prefix("graded.homogeneity."), 0);
    let mut bad = Vec::new();
    if with_prefix("graded.homogeneity.").len() != 10 {
        bad.push("expected 8 class bases and 2 generic bases".to_string());
    }
    for n in CLASS_NUMBERS {
        let dd = degree_data(fano_class(n).unwrap().base());
        if !dd.sum_is_three_delta() || !dd.middle_symmetric() || !dd.resolution_symmetric() {
            bad.push(format!("No.{n}: degree bookkeeping"));
        }
    }
    for (n, want) in [(308, (51, 47)), (1766, (24, 26))] {
        let dd = degree_data(fano_class(n).unwrap().base());
        if (dd.delta, dd.k) != want {
            bad.push(format!("No.{n}: (δ, k) = ({}, {})", dd.delta, dd.k));
        }
    }
    if !bad.is_empty() {
        out.ok = false;
        out.detail = format!("{}; {}", out.detail, bad.join("; "));
    }
    out
}

fn criterion_7() -> Outcome {
    let out = checks(&with_prefix("sections."), SECTION_DRAWS);
    Outcome { detail: format!("{}, {SECTION_DRAWS} draws per locus", out.detail), ..out }
}

fn criterion_9() -> Outcome {
    let (missed, tried) = common::undetected(SEED, 20);
    Outcome {
        ok: missed.is_empty(),
        detail: if missed.is_empty() { format!("{tried}/{tried} faults detected") } else { missed.join("; ") },
    }
}

#[test]
fn acceptance() {
    type Criterion = (u32, &'static str, Option<Duration>, Box<dyn Fn() -> Outcome>);
    let secs = |s| Some(Duration::from_secs(s));
    let criteria: Vec<Criterion> = vec![
        (
            1,
            "identity suite is exactly zero",
            secs(5),
            Box::new(|| {
                checks(
                    &ids(&[
                        "pi.g_decomposition",
                        "pi.normalization_kernel",
                        "pi.syzygy",
                        "pi.block_presentation",
                        "h13.contractions",
                    ]),
                    0,
                )
            }),
        ),
        (2, "unprojection (a)–(d)", secs(60), Box::new(|| checks(&ids(&["pi.unprojection"]), 0))),
        (
            3,
            "GL2 and (GL2)³⋊S3 covariance, hyperdeterminant",
            secs(120),
            Box::new(|| checks(&ids(&["pi.gl2_covariance", "h13.actions", "h13.hyperdet"]), 0)),
        ),
        (
            4,
            "randomized geometry, seed 42, 100 samples each",
            secs(600),
            Box::new(|| {
                checks(
                    &ids(&["pi.projection_roundtrip", "pi.pfaffian_chart", "pi.singular_locus", "h13.isomorphism"]),
                    SAMPLES,
                )
            }),
        ),
        (5, "weights, degrees, homogeneity", secs(5), Box::new(criterion_5)),
        (
            6,
            "adjunction and Hilbert numerators",
            secs(10),
            Box::new(|| {
                let mut v = with_prefix("graded.adjunction.");
                v.extend(with_prefix("graded.numerator."));
                checks(&v, 0)
            }),
        ),
        (7, "threefold sections", secs(300), Box::new(criterion_7)),
        (8, "fibers over the orbit representatives", secs(10), Box::new(|| checks(&ids(&["h13.fibers"]), 0))),
        (9, "mutation: every perturbation detected", None, Box::new(criterion_9)),
    ];
    let mut failed = Vec::new();
    for (n, title, budget, f) in criteria {
        let start = Instant::now();
        let out = f();
        let elapsed = start.elapsed();
        let in_time = budget.is_none_or(|b| elapsed < b);
        let ok = out.ok && in_time;
        let limit = budget.map_or("no limit".to_string(), |b| format!("limit {} s", b.as_secs()));
        println!(
            "criterion {n}: {} — {title} ({}; {:.3} s, {limit})",
            if ok { "PASS" } else { "FAIL" },
            out.detail,
            elapsed.as_secs_f64()
        );
        if !ok {
            failed.push(n);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
