//! End-to-end tests of the `crofton` binary: the gen → eval → render
//! pipeline consumes its own outputs, seeds reproduce, and the exit-code
//! contract holds.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_crofton"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn tempdir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("crofton-cli-{tag}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn gen_eval_render_round_trip() {
    let dir = tempdir("roundtrip");
    let set = dir.join("s.json");
    let report = dir.join("report.json");
    let svg = dir.join("s.svg");

    let out = run(&["gen", "disk-circles", "--L", "500", "--out", path_str(&set)]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(set.exists());
    assert!(dir.join("s.json.manifest.json").exists(), "manifest sidecar");

    let parsed: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&set).unwrap()).unwrap();
    let circles = parsed["primitives"].as_array().unwrap().len();
    assert!((101..=105).contains(&circles), "got {circles} circles");
    assert!((parsed["total_length"].as_f64().unwrap() - 500.0).abs() < 1e-6 * 500.0);

    let out = run(&[
        "eval",
        "--set",
        path_str(&set),
        "--domain",
        "disk",
        "--method",
        "scan",
        "--theta-count",
        "512",
        "--out",
        path_str(&report),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let rep: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let sup = rep["sup_value"].as_f64().unwrap();
    assert!((0.5 - 1e-6..=100.0).contains(&sup), "sup {sup}");

    let out = run(&[
        "render",
        "--set",
        path_str(&set),
        "--domain",
        "disk",
        "--report",
        path_str(&report),
        "--out",
        path_str(&svg),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let body = std::fs::read_to_string(&svg).unwrap();
    assert!(body.contains("<svg"));
    assert!(body.contains("#d62728"), "witness overlay color present");
}

#[test]
fn set_json_round_trips_through_eval() {
    let dir = tempdir("jsonstable");
    let set = dir.join("s.json");
    run(&["gen", "steinhaus", "--n", "3", "--eps", "0.21", "--out", path_str(&set)]);
    let first = std::fs::read_to_string(&set).unwrap();
    // Re-parse and re-serialize through the library type: byte-identical.
    let parsed: crofton::RectifiableSet = crofton::RectifiableSet::from_json(&first).unwrap();
    assert_eq!(first, parsed.to_json().unwrap());
}

#[test]
fn steinhaus_length_parameterization() {
    let dir = tempdir("params");
    let set = dir.join("s.json");
    let out = run(&[
        "gen", "steinhaus", "--L", "1000", "--domain", "disk", "--out", path_str(&set),
    ]);
    assert!(out.status.success());
    let parsed: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&set).unwrap()).unwrap();
    assert_eq!(parsed["metadata"]["steinhaus"]["n"], 10);
    assert!((parsed["metadata"]["steinhaus"]["epsilon"].as_f64().unwrap() - 0.01).abs() < 1e-15);
}

#[test]
fn reuleaux_longimeter_gen() {
    let dir = tempdir("reuleaux");
    let set = dir.join("s.json");
    let out = run(&[
        "gen", "steinhaus", "--n", "6", "--eps", "0.2", "--domain", "reuleaux:1",
        "--out", path_str(&set),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let parsed: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&set).unwrap()).unwrap();
    assert!(!parsed["primitives"].as_array().unwrap().is_empty());
}

#[test]
fn empty_set_evaluates_to_zero() {
    let dir = tempdir("empty");
    let set = dir.join("empty.json");
    std::fs::write(&set, r#"{"primitives": [], "total_length": 0.0}"#).unwrap();
    let out = run(&[
        "eval", "--set", path_str(&set), "--method", "scan", "--theta-count", "64",
    ]);
    assert!(out.status.success());
    let rep: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(rep["sup_value"].as_f64().unwrap(), 0.0);
}

#[test]
fn mc_eval_is_seed_reproducible() {
    let dir = tempdir("mcseed");
    let set = dir.join("s.json");
    run(&["gen", "disk-circles", "--L", "80", "--out", path_str(&set)]);
    let a = run(&[
        "eval", "--set", path_str(&set), "--method", "mc", "--samples", "20000",
        "--seed", "5",
    ]);
    let b = run(&[
        "eval", "--set", path_str(&set), "--method", "mc", "--samples", "20000",
        "--seed", "5",
    ]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn render_is_byte_identical() {
    let dir = tempdir("svgdet");
    let set = dir.join("s.json");
    run(&["gen", "steinhaus", "--n", "5", "--eps", "0.2", "--domain", "square:1",
        "--out", path_str(&set)]);
    let (s1, s2) = (dir.join("a.svg"), dir.join("b.svg"));
    run(&["render", "--set", path_str(&set), "--domain", "square:1", "--out", path_str(&s1)]);
    run(&["render", "--set", path_str(&set), "--domain", "square:1", "--out", path_str(&s2)]);
    assert_eq!(std::fs::read(&s1).unwrap(), std::fs::read(&s2).unwrap());
}

#[test]
fn verify_longimeter_passes() {
    let out = run(&["verify", "longimeter", "--n", "6"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stdout));
    let rep: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(rep["pass"], true);
}

#[test]
fn scan_single_length_emits_row_without_fit() {
    let out = run(&[
        "scan", "scaling", "--L", "1000", "--domain", "disk", "--theta-count", "128",
        "--format", "json",
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8_lossy(&out.stdout);
    let mut docs = text.trim().split('\n').collect::<Vec<_>>();
    // Last line is the fit summary.
    let fit: serde_json::Value = serde_json::from_str(docs.pop().unwrap()).unwrap();
    assert!(fit["slope"].is_null());
    let study: serde_json::Value = serde_json::from_str(&docs.join("\n")).unwrap();
    assert_eq!(study["rows"].as_array().unwrap().len(), 1);
}

#[test]
fn exit_codes_are_distinguishable() {
    // Resource limit -> 4.
    let dir = tempdir("codes");
    let set = dir.join("s.json");
    let out = run(&[
        "gen", "steinhaus", "--n", "10", "--eps", "1e-9", "--out", path_str(&set),
    ]);
    assert_eq!(out.status.code(), Some(4), "{}", String::from_utf8_lossy(&out.stderr));
    // Usage error -> 2 (clap default).
    let out = run(&["gen", "steinhaus", "--bogus-flag"]);
    assert_eq!(out.status.code(), Some(2));
    // Runtime error (missing file) -> 1.
    let out = run(&["eval", "--set", "/nonexistent/nope.json"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn optimize_writes_set_history_and_report() {
    let dir = tempdir("opt");
    let (set, hist, report) = (dir.join("o.json"), dir.join("h.jsonl"), dir.join("r.json"));
    let out = run(&[
        "optimize", "--domain", "disk", "--segments", "40", "--L", "20",
        "--iterations", "60", "--seed", "2", "--evaluator", "mc:512",
        "--certify-theta-count", "128",
        "--out", path_str(&set), "--history", path_str(&hist), "--report", path_str(&report),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let lines: Vec<serde_json::Value> = std::fs::read_to_string(&hist)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 60);
    assert!(lines[0]["objective"].as_f64().is_some());
    assert!(lines[0]["accepted"].is_boolean());
    let rep: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(rep["method"], "breakpoint_scan");
    let parsed: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&set).unwrap()).unwrap();
    assert_eq!(parsed["primitives"].as_array().unwrap().len(), 40);
    assert!((parsed["total_length"].as_f64().unwrap() - 20.0).abs() < 1e-9 * 20.0);
}
