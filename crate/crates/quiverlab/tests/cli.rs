use std::path::PathBuf;

use quiverlab::cli::{run, Outcome};
use serde_json::Value;

fn session(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "sessions", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn quiverlab(args: &[&str]) -> Outcome {
    quiverlab_with_stdin(args, "")
}

fn quiverlab_with_stdin(args: &[&str], stdin: &str) -> Outcome {
    let mut input = stdin.as_bytes();
    run(std::iter::once("quiverlab").chain(args.iter().copied()), &mut input)
}

fn structured(args: &[&str]) -> Value {
    let mut all = vec!["--format", "structured"];
    all.extend_from_slice(args);
    let out = quiverlab(&all);
    serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", out.stdout))
}

#[test]
fn info_reports_dimension_and_class() {
    let ex1 = session("ex1.txt");
    let out = quiverlab(&["info", &ex1]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let v = structured(&["info", &ex1]);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["command"], "info");
    assert_eq!(v["result"]["algebra"]["dim"], 16);
    assert_eq!(v["result"]["special_biserial"], true);
}

#[test]
fn structured_output_is_deterministic() {
    let ex6 = session("ex6.txt");
    for cmd in ["gldim", "tautilt", "ann", "endo", "bounds"] {
        let args = ["--format", "structured", cmd, ex6.as_str()];
        let (a, b) = (quiverlab(&args), quiverlab(&args));
        assert_eq!(a.code, 0, "{cmd}: {}", a.stderr);
        assert_eq!(a.stdout, b.stdout, "{cmd}");
    }
}

#[test]
fn reads_the_session_from_stdin() {
    let text = std::fs::read_to_string(session("ex5.txt")).unwrap();
    let out = quiverlab_with_stdin(&["--format", "structured", "ann", "-"], &text);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(out.stdout, quiverlab(&["--format", "structured", "ann", &session("ex5.txt")]).stdout);
}

#[test]
fn exit_codes() {
    let ex5 = session("ex5.txt");
    assert_eq!(quiverlab(&["bogus"]).code, 2);
    assert_eq!(quiverlab(&["info", "/nonexistent/session.txt"]).code, 2);
    assert_eq!(quiverlab(&["tau", &ex5, "--module", "Nope"]).code, 2);
    // A single summand is τ-rigid but not τ-tilting.
    let out = quiverlab(&["tautilt", &ex5, "--module", "T1"]);
    assert_eq!(out.code, 1, "{}", out.stdout);
    assert_eq!(quiverlab(&["tautilt", &ex5]).code, 0);
}

#[test]
fn malformed_input_is_a_usage_error() {
    let out = quiverlab_with_stdin(&["check", "-"], "vertices: 1 2\narrow a: 1 -> 3\n");
    assert_eq!(out.code, 2);
    assert!(!out.stderr.is_empty());
}

#[test]
fn suite_reports_recorded_deviations() {
    let out = quiverlab(&["paper-suite", "--case", "EX1", "--case", "EX5"]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    let out = quiverlab(&["paper-suite", "--case", "EX6"]);
    assert_eq!(out.code, 1);
    let v = structured(&["paper-suite", "--case", "EX6"]);
    let rows = v["result"]["rows"].as_array().unwrap();
    assert!(rows.iter().filter(|r| r["pass"] == false).all(|r| r["deviation"].is_string()));
}

#[test]
fn unknown_suite_case_is_a_warning() {
    let out = quiverlab(&["paper-suite", "--case", "EX99"]);
    assert_eq!(out.code, 0);
    assert!(out.stderr.contains("unknown case `EX99`"));
}

#[test]
fn binary_exit_status_matches() {
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_quiverlab"))
        .args(["gldim", &session("ex6.txt")])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains('2'));
    let bad = std::process::Command::new(env!("CARGO_BIN_EXE_quiverlab")).arg("bogus").output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
