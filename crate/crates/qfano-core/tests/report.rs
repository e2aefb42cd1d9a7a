//! Report determinism, ordering and JSON shape.

use qfano_core::report::{run, Format, Report, RunConfig};
use qfano_core::CheckStatus;
use serde_json::Value;

fn config(parallelism: usize) -> RunConfig {
    RunConfig {
        master_seed: 42,
        samples: 10,
        only: Some(
            ["sections.550", "pi.pfaffian_chart", "graded.numerator.308", "h13.isomorphism", "pi.syzygy"]
                .map(String::from)
                .to_vec(),
        ),
        classes: None,
        format: Format::Json,
        parallelism,
    }
}

#[test]
fn same_config_gives_identical_content_at_any_parallelism() {
    let a = run(&config(1)).unwrap().without_timings();
    let b = run(&config(4)).unwrap().without_timings();
    assert_eq!(a.results, b.results);
    let mut b = b;
    b.config.parallelism = 1;
    assert_eq!(a.to_json(), b.to_json());
    assert_eq!(a.to_text(), b.to_text());
}

#[test]
fn results_are_in_id_order_and_round_trip() {
    let r = run(&config(3)).unwrap();
    let ids: Vec<&str> = r.results.iter().map(|c| c.id.as_str()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
    assert_eq!(Report::from_json(&r.to_json()).unwrap(), r);
    assert!(r.all_pass());
}

#[test]
fn json_has_the_documented_shape() {
    let r = run(&config(2)).unwrap();
    let v: Value = serde_json::from_str(&r.emit()).unwrap();
    assert!(v["version"].is_string());
    assert_eq!(v["config"]["master_seed"], 42);
    assert_eq!(v["config"]["format"], "json");
    for res in v["results"].as_array().unwrap() {
        assert!(res["id"].is_string());
        assert!(["pass", "fail", "skipped"].contains(&res["status"].as_str().unwrap()));
        assert!(res["witness"].is_null() || res["witness"].is_string());
        assert!(res["samples_used"].is_u64());
        assert!(res["elapsed"]["secs"].is_u64() && res["elapsed"]["nanos"].is_u64());
    }
    let classes = v["classes"].as_array().unwrap();
    assert_eq!(classes.len(), 8);
    let c308 = classes.iter().find(|c| c["number"] == 308).unwrap();
    assert_eq!((c308["delta"].as_i64(), c308["k"].as_i64()), (Some(51), Some(47)));
}

#[test]
fn failing_report_carries_the_witness() {
    let mut r = run(&config(1)).unwrap();
    r.results[0].status = CheckStatus::Fail;
    r.results[0].witness = Some("p1*u - 2*v".into());
    assert!(!r.all_pass());
    assert!(r.to_text().contains("FAIL  ") && r.to_text().contains("p1*u - 2*v"));
}
