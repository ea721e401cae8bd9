use std::process::{Command, Output};

use serde_json::Value;

fn liealg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_liealg")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = liealg(&all);
    let v = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap(), v)
}

fn data(name: &str) -> String {
    format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn classify_heisenberg() {
    let (code, v) = json(&["classify", "zoo:heisenberg3"]);
    assert_eq!(code, 0);
    assert_eq!(v["frattini"]["ideal"]["space"], serde_json::json!([["0", "0", "1"]]));
    assert_eq!(v["elementary"]["verdict"], "ProvenFalse");
    assert_eq!(v["minimal_non_elementary"]["verdict"], "ProvenTrue");
}

#[test]
fn classify_jordan_block() {
    let (code, v) = json(&["classify", "zoo:jordan_block3"]);
    assert_eq!(code, 0);
    assert_eq!(v["frattini"]["ideal"]["space"], serde_json::json!([["0", "1", "0"]]));
    assert_eq!(v["a_algebra"]["verdict"], "ProvenTrue");
    assert_eq!(v["almost_algebraic"]["verdict"], "ProvenFalse");
}

#[test]
fn classify_split_a2_has_heisenberg_witness() {
    let (code, v) = json(&["classify", "split:A2"]);
    assert_eq!(code, 0);
    assert_eq!(v["elementary"]["verdict"], "ProvenFalse");
    assert_eq!(v["a_algebra"]["witness"]["kind"], "subspace");
}

#[test]
fn parabolics_of_a2_and_a1() {
    let (code, v) = json(&["parabolics", "A2"]);
    assert_eq!(code, 0);
    let dims: Vec<u64> = v["parabolics"].as_array().unwrap().iter().map(|r| r["nilradical_dim"].as_u64().unwrap()).collect();
    assert_eq!(dims, vec![3, 2, 2, 0]);
    let (_, v) = json(&["parabolics", "A1"]);
    assert_eq!(v["parabolics"].as_array().unwrap().len(), 2);
}

#[test]
fn single_parabolic_of_b2() {
    let (code, v) = json(&["parabolics", "B2", "--subset", "1"]);
    assert_eq!(code, 0);
    let row = &v["parabolics"][0];
    assert_eq!(row["subset"], "{1}");
    assert_eq!(row["nilradical_abelian"], false);
    assert_eq!(row["nilradical_roots"].as_array().unwrap().len(), 3);
}

#[test]
fn verify_section3_passes() {
    let (code, v) = json(&["verify", "section3"]);
    assert_eq!(code, 0);
    assert_eq!(v["fail"], 0);
}

#[test]
fn audit_is_clean_and_deterministic() {
    let args = ["audit", "--count", "40", "--dim", "5", "--seed", "1", "--format", "json"];
    let a = liealg(&args);
    let b = liealg(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn export_round_trips_through_a_file() {
    let out = liealg(&["export", "zoo:sl2_natural", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let dir = std::env::temp_dir().join(format!("liealg-export-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("nat.json");
    std::fs::write(&path, &out.stdout).unwrap();
    let (code, v) = json(&["classify", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["structure"]["dim"], 5);
    assert_eq!(v["almost_algebraic"]["verdict"], "ProvenTrue");
    assert_eq!(v["a_algebra"]["verdict"], "ProvenFalse");
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn input_errors_exit_2() {
    for args in [
        vec!["classify", "zoo:nope"],
        vec!["classify", "split:Z9"],
        vec!["classify", "/nonexistent/file.json"],
        vec!["parabolics", "A2", "--subset", "3"],
        vec!["verify", "section9"],
        vec!["audit", "--dim", "9"],
    ] {
        assert_eq!(liealg(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn strict_mode_turns_unknown_into_exit_3() {
    let f = data("undecided5.json");
    assert_eq!(liealg(&["classify", &f]).status.code(), Some(0));
    assert_eq!(liealg(&["classify", &f, "--strict"]).status.code(), Some(3));
    assert_eq!(liealg(&["classify", "zoo:sl2", "--strict"]).status.code(), Some(0));
}

#[test]
fn human_format_renders_the_json() {
    let out = liealg(&["classify", "zoo:r2"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("phi_free:\n  verdict: ProvenTrue\n"));
    assert!(text.contains("structure:\n  name: r2\n"));
}
