//! End-to-end behaviour of the `qfano` binary: output, determinism and the
//! exit-code contract.

use serde_json::Value;
use std::process::{Command, Output};

fn qfano(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qfano")).args(args).env_remove("QFANO_SEED").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_single_check_passes() {
    let o = qfano(&["verify", "--only", "pi.g_decomposition"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("PASS  pi.g_decomposition"));
    assert!(text.contains("1 passed, 0 failed"));
}

#[test]
fn verify_all_passes_and_json_is_ordered() {
    let o = qfano(&["verify", "--all", "--seed", "42", "--samples", "100", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let results = v["results"].as_array().unwrap();
    assert_eq!(results.len(), 48);
    let ids: Vec<&str> = results.iter().map(|r| r["id"].as_str().unwrap()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
    assert!(results.iter().all(|r| r["status"] == "pass"));
    assert_eq!(v["config"]["samples"], 100);
}

#[test]
fn seed_comes_from_the_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_qfano"))
        .args(["verify", "--only", "pi.pfaffian_chart", "--format", "json"])
        .env("QFANO_SEED", "7")
        .output()
        .unwrap();
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["config"]["master_seed"], 7);
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        vec!["verify", "--only", "pi.no_such_check"],
        vec!["verify"],
        vec!["verify", "--all", "--classes", "309"],
        vec!["verify", "--all", "--samples", "0"],
        vec!["hilbert", "--class", "309"],
        vec!["sample", "--target", "X"],
        vec!["catalog", "dump", "pi.F10"],
        vec!["frobnicate"],
    ] {
        let o = qfano(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?} did work before failing");
    }
}

#[test]
fn hilbert_reports_degrees_and_adjunction() {
    let o = qfano(&["hilbert", "--class", "308", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!((v["delta"].as_i64(), v["k"].as_i64()), (Some(51), Some(47)));
    assert_eq!(v["adjunction"]["x_degree"], -1);
    assert_eq!(v["expansion"].as_array().unwrap().len(), 21);

    let o = qfano(&["hilbert", "--class", "1766", "--order", "6"]);
    let text = stdout(&o);
    assert!(text.contains("delta = 24") && text.contains("k = 26"));
    assert!(text.contains("d = 6 7 7 8 8 9 8 9 10"));
    assert!(text.contains("expansion = 1, 1, 2, 5, 8, 12, 20"));
    assert!(text.contains("K_X = O(-1)"));
}

#[test]
fn samples_are_deterministic_and_one_coordinate_per_line() {
    let a = qfano(&["sample", "--seed", "5", "--bound", "4", "--target", "Pi"]);
    let b = qfano(&["sample", "--seed", "5", "--bound", "4", "--target", "Pi"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert_eq!(text.lines().count(), 19);
    assert!(text.lines().all(|l| l.split_once(" = ").is_some()));
    assert_eq!(stdout(&qfano(&["sample", "--target", "H13"])).lines().count(), 17);
    assert_eq!(stdout(&qfano(&["sample", "--target", "G"])).lines().count(), 16);
    assert_eq!(stdout(&qfano(&["sample", "--target", "S"])).lines().count(), 19);
}

#[test]
fn catalog_dump_prints_canonical_forms() {
    let o = qfano(&["catalog", "dump", "iso.p111"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "-3*L246");
    let o = qfano(&["catalog", "dump", "pi.m45"]);
    assert_eq!(stdout(&o).trim(), "p1*p4 - p2*p3");
    let listed = stdout(&qfano(&["catalog", "list"]));
    assert!(listed.lines().any(|l| l == "class.308.T"));
}
