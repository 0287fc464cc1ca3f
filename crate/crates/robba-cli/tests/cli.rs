use std::process::{Command, Output};

use jsonschema::JSONSchema;
use serde_json::Value;

fn robba(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_robba")).args(args).output().expect("binary runs")
}

fn schema() -> JSONSchema {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../docs/schema.json");
    let text = std::fs::read_to_string(path).expect("schema file");
    let v: Value = serde_json::from_str(&text).unwrap();
    JSONSchema::compile(&v).expect("schema compiles")
}

/// Runs with `--format json`, checks the exit code and the schema.
fn json(args: &[&str], code: i32) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = robba(&all);
    assert_eq!(out.status.code(), Some(code), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_slice(&out.stdout).expect("json output");
    let s = schema();
    if let Err(errs) = s.validate(&v) {
        let msgs: Vec<String> = errs.map(|e| format!("{} at {}", e, e.instance_path)).collect();
        panic!("{args:?} violates the schema: {msgs:?}");
    }
    v
}

#[test]
fn gseries_congruences_pass() {
    let v = json(&["gseries", "--p", "3", "--r", "1", "--n-max", "2", "--depth", "4", "--check"], 0);
    let cs = v["congruences"].as_array().unwrap();
    assert_eq!(cs.len(), 2);
    assert!(cs.iter().all(|c| c["holds"] == true && c["remainder"] == "[]"));
    assert_eq!(v["c1_phi"]["exact"], "-2/3");
    assert_eq!(v["c1_phi"]["holds"], true);
    assert!(v["c1_phi"]["certified"].as_i64().unwrap() >= 6);
    assert_eq!(v["pass"], true);
}

#[test]
fn gseries_gamma_residues() {
    let v = json(&["gseries", "--p", "3", "--r", "1", "--n-max", "1", "--t-prec", "200", "--check"], 0);
    let g = v["c1_gamma"].as_array().unwrap();
    assert_eq!(g.len(), 1);
    assert_eq!(g[0]["holds"], true);
}

#[test]
fn zero_level_is_a_usage_error() {
    assert_eq!(robba(&["gseries", "--p", "3", "--r", "1", "--n-max", "0"]).status.code(), Some(2));
}

#[test]
fn bad_inputs_are_usage_errors() {
    assert_eq!(robba(&["limit", "--p", "4", "--k", "4", "--L", "0"]).status.code(), Some(2));
    assert_eq!(robba(&["limit", "--p", "5", "--k", "4", "--L", "1/"]).status.code(), Some(2));
    assert_eq!(robba(&["classify", "--p", "5", "--k", "9", "--L", "0"]).status.code(), Some(2));
}

#[test]
fn budget_cap_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_robba"))
        .args(["gseries", "--p", "3", "--r", "1", "--n-max", "2"])
        .env("ROBBA_BUDGET_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget"));
}

#[test]
fn limit_recovers_zero() {
    let v = json(&["limit", "--p", "5", "--k", "4", "--L", "0", "--check"], 0);
    assert_eq!(v["recovered_L"], "0");
    assert_eq!(v["round_trip"], true);
    assert_eq!(v["limit"]["type"], "SemistableNoncrystalline");
    assert_eq!(v["terms"].as_array().unwrap().len(), 5);
}

#[test]
fn limit_at_infinity_is_crystalline() {
    let v = json(&["limit", "--p", "3", "--k", "3", "--L", "inf", "--n-max", "3", "--check"], 0);
    assert_eq!(v["recovered_L"], "inf");
    assert_eq!(v["limit"]["type"], "Crystalline");
    assert_eq!(v["limit"]["direction"], serde_json::json!(["1", "0"]));
}

#[test]
fn limit_gaps_increase() {
    let v = json(&["limit", "--p", "5", "--k", "4", "--L", "1", "--n-max", "6", "--check"], 0);
    assert_eq!(v["gaps_monotone"], true);
    let gaps: Vec<String> = v["terms"].as_array().unwrap().iter().map(|t| t["third_gap"].as_str().unwrap().to_string()).collect();
    assert_eq!(gaps.len(), 6);
}

#[test]
fn limit_with_quadratic_parameter() {
    let v = json(&["limit", "--p", "7", "--k", "5", "--L", "5/2+1*pi", "--n-max", "3"], 0);
    assert_eq!(v["round_trip"], true);
}

#[test]
fn classify_weight_four_full() {
    let v = json(&["classify", "--p", "5", "--k", "4", "--L", "0", "--full", "--check"], 0);
    let rec = &v["records"][0];
    assert_eq!(rec["shape"], serde_json::json!({"kind": "ReducibleFull", "i": 2, "j": 1}));
    assert_eq!(rec["lambda"], serde_json::json!({"type": "value", "value": "3"}));
    assert_eq!(rec["conditional"], false);
    assert_eq!(v["pass"], true);
}

#[test]
fn classify_weight_five_irreducible() {
    let v = json(&["classify", "--p", "7", "--k", "5", "--L", "0", "--check"], 0);
    assert_eq!(v["records"][0]["shape"], serde_json::json!({"kind": "Irreducible", "c": 10}));
}

#[test]
fn classify_table_rows() {
    let v = json(&["classify", "--p", "5", "--k", "6", "--L", "1/3", "--table", "--check"], 0);
    let ks: Vec<i64> = v["records"].as_array().unwrap().iter().map(|r| r["k"].as_i64().unwrap()).collect();
    assert_eq!(ks, vec![3, 4, 5, 6]);
}

#[test]
fn text_output_is_default() {
    let out = robba(&["classify", "--p", "7", "--k", "5", "--L", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("ind(omega2^10)"), "{text}");
    assert!(serde_json::from_str::<Value>(&text).is_err());
}
