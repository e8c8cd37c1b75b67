use std::process::{Command, Output};

use serde_json::Value;

fn cws(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cws")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = cws(&all);
    let code = out.status.code().expect("exit code");
    let text = String::from_utf8(out.stdout).unwrap();
    (serde_json::from_str(&text).unwrap_or(Value::Null), code)
}

const FIVE: &str = r#"{"graph": {"n": 5, "kind": "ring"}, "classical": {"codewords": ["00000", "11111"]}}"#;
const SIX: &str = r#"{"graph": {"n": 6, "adjacency": ["010010", "101000", "010100", "001010", "100100", "000000"]},
                      "classical": {"codewords": ["000000", "111110"]}}"#;

#[test]
fn five_qubit_distance() {
    let (v, code) = json(&["distance", "--input", FIVE]);
    assert_eq!(code, 0);
    assert_eq!((v["n"].as_u64(), v["k"].as_u64(), v["d"].as_u64()), (Some(5), Some(1), Some(3)));
    assert_eq!(v["pure"], true);
}

#[test]
fn six_qubit_code_is_degenerate() {
    let (v, code) = json(&["distance", "--input", SIX]);
    assert_eq!(code, 0);
    assert_eq!((v["d"].as_u64(), &v["pure"]), (Some(3), &Value::Bool(false)));
}

#[test]
fn families_round_trip_through_distance() {
    let (v, code) = json(&["families", "toric", "--t", "1..=3"]);
    assert_eq!(code, 0);
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 3);
    for (row, d) in rows.iter().zip([3, 5, 7]) {
        let descriptor = serde_json::to_string(row).unwrap();
        let (p, code) = json(&["distance", "--input", &descriptor]);
        assert_eq!(code, 0);
        assert_eq!(p["d"].as_u64(), Some(d));
        assert_eq!(p, row["params"]);
    }
}

#[test]
fn capped_search_exits_with_two() {
    let (v, _) = json(&["families", "toric", "--t", "3"]);
    let descriptor = serde_json::to_string(&v[0]).unwrap();
    let (p, code) = json(&["distance", "--input", &descriptor, "--max-weight", "2"]);
    assert_eq!(code, 2);
    assert_eq!(p["d"], "≥3");
}

#[test]
fn malformed_input_exits_with_one() {
    let out = cws(&["distance", "--input", "{not json"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!out.stderr.is_empty());
    let out = cws(&["distance", "--input", "/nonexistent/file.json"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn cyclic_search_verifies_a_survivor() {
    let (v, code) = json(&["search-cyclic", "--n", "21", "--q", "1110101", "--target-d", "3"]);
    assert_eq!(code, 0);
    assert!(v["sieve"]["survivors"].as_u64().unwrap() > 0);
    assert_eq!(v["code"]["params"]["k"].as_u64(), Some(15));
    assert_eq!(v["code"]["params"]["d"].as_u64(), Some(3));

    let (v, code) = json(&["search-cyclic", "--n", "13", "--p", "11", "--target-d", "5", "--symmetric"]);
    assert_eq!(code, 0);
    assert_eq!(v["code"]["params"]["d"].as_u64(), Some(5));
    assert_eq!(v["code"]["params"]["k"].as_u64(), Some(1));
}

#[test]
fn cyclic_search_preconditions_and_infeasibility() {
    let out = cws(&["search-cyclic", "--n", "7", "--q", "11", "--target-d", "3", "--symmetric"]);
    assert_eq!(out.status.code(), Some(1));
    // x^7 - 1 over (1 + x): a [[7,6]] code cannot reach distance 3.
    let (v, code) = json(&["search-cyclic", "--n", "7", "--q", "11", "--target-d", "3"]);
    assert_eq!(code, 3);
    assert!(v["sieve"]["unavoidable"].is_string() || v["sieve"]["survivors"] == 0);
}

#[test]
fn gv_presets() {
    let (v, code) = json(&["gv", "--preset", "square-torus"]);
    assert_eq!(code, 0);
    let rows: Vec<(u64, u64, u64)> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|r| (r["n"].as_u64().unwrap(), r["k"].as_u64().unwrap(), r["d"].as_u64().unwrap()))
        .collect();
    assert_eq!(rows, [(25, 4, 5), (36, 13, 5), (49, 24, 5), (64, 38, 5), (81, 53, 5)]);
    let (v, _) = json(&["gv", "--preset", "triangular"]);
    let rows: Vec<(u64, u64, u64)> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|r| (r["n"].as_u64().unwrap(), r["k"].as_u64().unwrap(), r["d"].as_u64().unwrap()))
        .collect();
    assert_eq!(rows, [(36, 9, 6), (49, 15, 7), (64, 28, 7), (81, 43, 7)]);
    let (v, code) = json(&["gv", "--n", "5..3"]);
    assert_eq!((v, code), (Value::Array(vec![]), 0));
    let (v, _) = json(&["gv", "--n", "21", "--k", "15", "--variant", "cyclic-nonpalindromic"]);
    assert_eq!(v[0]["d_gv"].as_u64(), Some(3));
}

#[test]
fn lc_orbit_bounds() {
    let (v, code) = json(&["lc-orbit", "--input", r#"{"n": 5, "kind": "ring"}"#]);
    assert_eq!(code, 0);
    assert_eq!(v["max_weight_bound"].as_u64(), Some(3));
    let (v, _) = json(&["lc-orbit", "--input", r#"{"n": 4, "kind": "edgeless"}"#]);
    assert_eq!((v["orbit_size"].as_u64(), v["min_generator_weight"].as_u64()), (Some(1), Some(1)));
    let (v, _) = json(&["lc-orbit", "--input", r#"{"n": 6, "kind": "ring"}"#]);
    assert_eq!(v["regular_bound"].as_u64(), Some(3));
    let (v, _) = json(&["lc-orbit", "--input", FIVE]);
    assert_eq!(v["max_weight_bound"].as_u64(), Some(3));
    assert_eq!(v["binary_bound"].as_u64(), Some(5));
}

#[test]
fn graph_distance_and_verify() {
    let (v, code) = json(&["graph-distance", "--input", r#"{"n": 25, "kind": "square-torus"}"#]);
    assert_eq!((v["d"].as_u64(), code), (Some(5), 0));
    let (v, code) = json(&["verify", "--input", FIVE, "--target-d", "3"]);
    assert_eq!(code, 0);
    assert_eq!((&v["self_orthogonal"], &v["target_met"]), (&Value::Bool(true), &Value::Bool(true)));
    let (_, code) = json(&["verify", "--input", FIVE, "--target-d", "4"]);
    assert_eq!(code, 3);
}

#[test]
fn repetition_rows_report_their_match() {
    let (v, code) = json(&["families", "table1", "--m", "5"]);
    assert_eq!(code, 0);
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 5);
    assert!(rows.iter().all(|r| r["matches"] == true));
    let (v, _) = json(&["families", "repetition-search", "--m", "5", "--k", "3"]);
    assert_eq!(v[0]["params"]["d"].as_u64(), Some(5));
}

#[test]
fn single_worker_runs_are_deterministic() {
    let a = cws(&["families", "toric", "--t", "2", "--workers", "1"]);
    let b = cws(&["families", "toric", "--t", "2"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}
