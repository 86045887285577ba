//! Golden tests for the `xmoon` binary.

use std::process::{Command, Output};

use serde_json::{json, Value};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_xmoon")).args(args).output().expect("binary runs")
}

fn run_json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let out = run(&full);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn has_term(series: &Value, exponent: i64, value: &str) -> bool {
    series["terms"].as_array().unwrap().iter().any(|t| t[0] == json!(exponent) && t[1] == json!(value))
}

#[test]
fn expand_j() {
    let v = run_json(&["expand", "--form", "j", "--order", "8"]);
    assert_eq!(v["variable"], "q");
    assert_eq!(v["order"], 8);
    assert!(has_term(&v, -2, "1"));
    assert!(has_term(&v, 2, "196884"));
    assert!(has_term(&v, 8, "20245856256"));
    assert!(!v["terms"].as_array().unwrap().iter().any(|t| t[0] == json!(0)));
}

#[test]
fn expand_other_forms() {
    let e8 = run_json(&["expand", "--form", "niemeier:E8^3", "--order", "4"]);
    assert!(has_term(&e8, 0, "1"));
    assert!(has_term(&e8, 2, "720"));
    let d = run_json(&["expand", "--form", "delta", "--order", "4"]);
    assert_eq!(d["terms"], json!([[2, "1"], [4, "-24"]]));
    let jc = run_json(&["expand", "--form", "j-classical", "--order", "2"]);
    assert!(has_term(&jc, 0, "744"));
}

#[test]
fn extremal_k2_family() {
    let v = run_json(&["extremal", "--k", "2", "--order", "4"]);
    assert_eq!(v["g0_poly"]["poly"], json!(["393192", "-48", "-1"]));
    assert_eq!(v["allowed_count"], "42987521");
    let terms = v["series"]["terms"].as_array().unwrap();
    assert!(terms.iter().any(|t| t[0] == json!(2) && t[1]["poly"] == json!(["42987520"])));
    assert!(!terms.iter().any(|t| t[0] == json!(-2)), "q^-2 tachyon eliminated");
}

#[test]
fn extremal_k1_at_minus_24_is_j() {
    let g = run_json(&["extremal", "--k", "1", "--x", "-24", "--order", "8"]);
    let j = run_json(&["expand", "--form", "J", "--order", "8"]);
    assert_eq!(g, j);
}

#[test]
fn extremal_solve_g0() {
    let v = run_json(&["extremal", "--k", "2", "--solve-g0", "393192"]);
    assert_eq!(v["roots"], json!(["0", "-48"]));
    let none = run_json(&["extremal", "--k", "2", "--solve-g0", "1"]);
    assert_eq!(none["roots"], json!([]));
}

#[test]
fn decompose_value_and_form() {
    let v = run_json(&["decompose", "--value", "196884"]);
    assert_eq!(v[0]["terms"], json!([["196883", "1"], ["1", "1"]]));
    let f = run_json(&["decompose", "--form", "j", "--from", "2", "--to", "6"]);
    let arr = f.as_array().unwrap();
    assert_eq!(arr.len(), 3);
    assert_eq!(arr[2]["coefficient"], "864299970");
    let text = run(&["decompose", "--value", "196884"]);
    assert!(String::from_utf8_lossy(&text.stdout).contains("196884 = 1·196883 + 1·1"));
}

#[test]
fn verify_builtin_suite() {
    let v = run_json(&["verify", "--builtin", "--imax", "5"]);
    let reports = v["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 14);
    assert_eq!(v["all_pass"], false);
    for r in reports.iter().filter(|r| r["k"] == 2) {
        assert_eq!(r["all_pass"], true);
        assert_eq!(r["results"].as_array().unwrap().len(), 6);
    }
    // a failing row only changes the exit status under --strict
    assert_eq!(run(&["verify", "--builtin", "--imax", "2"]).status.code(), Some(0));
    assert_eq!(run(&["--strict", "verify", "--builtin", "--imax", "2"]).status.code(), Some(1));
}

#[test]
fn verify_identity_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ids.txt");
    std::fs::write(&path, "# k=2 only\nk=2: g[4i+2] = 2*j[2*(4i+2)]\n").unwrap();
    let p = path.to_str().unwrap();
    let out = run(&["--strict", "verify", "--file", p, "--imax", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("[PASS]"));
    std::fs::write(&path, "k=2: g[4i+").unwrap();
    assert_eq!(run(&["verify", "--file", p]).status.code(), Some(5));
}

#[test]
fn niemeier_listing() {
    let out = run(&["--format", "csv", "niemeier", "--list"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "name,coxeter_h,massless");
    assert_eq!(lines.len(), 25);
    assert!(lines.contains(&"D24,46,1128"));
}

#[test]
fn error_exit_codes() {
    assert_eq!(run(&["expand", "--form", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["niemeier", "--name", "Z24"]).status.code(), Some(2));
    assert_eq!(run(&["decompose", "--value", "-5"]).status.code(), Some(4));
    let bad_k = run(&["extremal", "--k", "9"]);
    assert_ne!(bad_k.status.code(), Some(0));
    assert!(!bad_k.stderr.is_empty());
}

#[test]
fn output_is_deterministic() {
    let a = run(&["--format", "json", "verify", "--builtin", "--imax", "3"]);
    let b = run(&["--format", "json", "verify", "--builtin", "--imax", "3"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("j.json");
    let out = run(&["--format", "json", "--out", path.to_str().unwrap(), "expand", "--form", "j", "--order", "4"]);
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!(has_term(&v, 4, "21493760"));
}
