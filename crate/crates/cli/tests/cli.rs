use std::path::PathBuf;
use std::process::{Command, Output};

use hnt_core::{ClassificationReport, TheoremCase, Verdict};
use serde_json::Value;

fn hnt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hnt"))
        .args(args)
        .env_remove("HNT_GROUP_CAP")
        .output()
        .expect("binary runs")
}

fn code_file(dir: &tempfile::TempDir, name: &str, contents: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("valid json on stdout")
}

#[test]
fn family_six_exhaustive_json() {
    let out = hnt(&["family", "--m", "6", "--exhaustive", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    assert_eq!(report["stabilizer_order"], 384);
    assert!(report["clauses"].as_array().unwrap().iter().all(|c| c["pass"] == true));
}

#[test]
fn family_rejects_odd_length() {
    let out = hnt(&["family", "--m", "5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("m must be even and ≥ 4"));
}

#[test]
fn family_ten_defaults_to_generator_checks() {
    let out = hnt(&["family", "--m", "10"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert_eq!(text.matches("[PASS]").count(), 6);
    assert!(!text.contains("[FAIL]"));
}

#[test]
fn classify_family_code() {
    let dir = tempfile::tempdir().unwrap();
    let path = code_file(&dir, "c4.txt", "# m=4 family\n4 2\n0000\n1111\n");
    let out = hnt(&["classify", "--input", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let report: ClassificationReport = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report.verdict, Verdict::NonfixingWitness);
    assert_eq!(report.theorem_case, Some(TheoremCase::Delta4BinaryEvenLength));
    assert_eq!(report.stabilizer_order, Some(192));
    let raw = json(&out);
    for key in ["delta", "verdict", "witness", "theorem_case", "stabilizer_order", "transitive_on_neighbours"] {
        assert!(raw.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn classify_repetition_code_is_fixed() {
    let dir = tempfile::tempdir().unwrap();
    let path = code_file(&dir, "r5.txt", "5 2\n00000\n11111\n");
    let out = hnt(&["classify", "--input", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let raw = json(&out);
    assert_eq!(raw["verdict"], "FIXED");
    assert_eq!(raw["witness"], Value::Null);
}

#[test]
fn classify_rejects_small_distance_and_bad_files() {
    let dir = tempfile::tempdir().unwrap();
    let close = code_file(&dir, "d2.txt", "4 2\n0000\n1100\n");
    assert_eq!(hnt(&["classify", "--input", close.to_str().unwrap()]).status.code(), Some(2));
    let garbage = code_file(&dir, "bad.txt", "4 2\n00x0\n");
    let out = hnt(&["classify", "--input", garbage.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    let missing = dir.path().join("nope.txt");
    assert_eq!(hnt(&["classify", "--input", missing.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn group_cap_env_var_is_honoured() {
    let dir = tempfile::tempdir().unwrap();
    let path = code_file(&dir, "c4.txt", "4 2\n0000\n1111\n");
    let out = Command::new(env!("CARGO_BIN_EXE_hnt"))
        .args(["classify", "--input", path.to_str().unwrap()])
        .env("HNT_GROUP_CAP", "100")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("infeasible"));
}

#[test]
fn lemma_suites() {
    assert_eq!(hnt(&["lemmas", "--m", "4", "--q", "2"]).status.code(), Some(0));
    let out = hnt(&["lemmas", "--m", "3", "--q", "3", "--seed", "3", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["seed"], 3);
    assert_eq!(hnt(&["lemmas", "--m", "12", "--q", "5"]).status.code(), Some(2));
}

#[test]
fn analyze_and_stabilizer() {
    let dir = tempfile::tempdir().unwrap();
    let path = code_file(&dir, "c6.txt", "6 2\n000000\n011011\n101101\n110110\n");
    let out = hnt(&["analyze", "--input", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let a = json(&out);
    assert_eq!(a["delta"], 4);
    assert_eq!(a["neighbour_count"], 24);
    assert_eq!(a["linear_binary"], true);
    assert_eq!(a["aut_neighbour_transitive"], true);

    let out = hnt(&["stabilizer", "--input", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(json(&out)["order"], 384);
    let out = hnt(&["stabilizer", "--input", path.to_str().unwrap(), "--of", "code", "--list"]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.starts_with("target: code\norder: "));
    assert!(text.lines().nth(2).unwrap().starts_with("perm=[0,1,2,3,4,5]; g0=[0,1]"));
}
