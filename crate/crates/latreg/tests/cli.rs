//! End-to-end runs of the command-line binary: every subcommand once, the
//! report files, determinism across worker counts, and the exit-code
//! contract (0 success, 2 usage or input trouble).

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn latreg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_latreg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

/// A scratch file unique to this test process.
fn scratch(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("latreg-cli-{}-{name}", std::process::id()));
    fs::write(&path, contents).expect("scratch file");
    path
}

const SQUARE: &str = r#"{"ambient_dim": 2, "vertices": [[0,0],[1,0],[0,1],[1,1]]}"#;
const SQUARE_SHIFTED: &str = r#"{"ambient_dim": 2, "vertices": [[5,7],[6,7],[5,8],[6,8]]}"#;
const SQUARE_DOUBLED: &str = r#"{"ambient_dim": 2, "vertices": [[0,0],[2,0],[0,2],[2,2]]}"#;
const TRIANGLE: &str = r#"{"ambient_dim": 2, "vertices": [[0,0],[1,0],[0,1]]}"#;

#[test]
fn catalog_lists_every_entry_up_to_the_default_dimension() {
    let out = latreg(&["catalog"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 26);
    assert!(lines[0].starts_with("segment-1"));
    assert!(text.contains("cube-4-v3"));
    assert!(text.contains("cell24-4-v2"));

    let out = latreg(&["catalog", "--max-dim", "5", "--format", "json"]);
    assert!(out.status.success());
    let parsed: Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    let entries = parsed.as_array().expect("an array");
    assert_eq!(entries.len(), 36);
    let hexagon = entries
        .iter()
        .find(|e| e["family"] == "hexagon" && e["variant"] == 2)
        .expect("hexagon variant 2 present");
    assert_eq!(hexagon["schlafli"], "{6}");
    assert_eq!(hexagon["expected"]["lattice_volume"], 18);
    assert_eq!(hexagon["expected"]["flag_count"], 12);
    assert_eq!(hexagon["polytope"]["ambient_dim"], 2);
}

#[test]
fn point_queries_on_polytope_files() {
    let square = scratch("square.json", SQUARE);
    let doubled = scratch("doubled.json", SQUARE_DOUBLED);

    let out = latreg(&["volume", square.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "2");

    let out = latreg(&["volume", doubled.to_str().unwrap()]);
    assert_eq!(stdout(&out).trim(), "8");

    let out = latreg(&["regular", square.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "lattice-regular");

    let out = latreg(&["elementary", square.to_str().unwrap()]);
    assert_eq!(stdout(&out).trim(), "elementary");

    let out = latreg(&["elementary", doubled.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "not elementary");
}

#[test]
fn congruence_query_emits_a_verifiable_witness() {
    let a = scratch("cong-a.json", SQUARE);
    let b = scratch("cong-b.json", SQUARE_SHIFTED);
    let c = scratch("cong-c.json", TRIANGLE);

    let out = latreg(&["congruent", a.to_str().unwrap(), b.to_str().unwrap(), "--emit-map"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let (verdict, json) = text.split_once('\n').expect("verdict then map");
    assert_eq!(verdict, "congruent");
    let map: Value = serde_json::from_str(json).expect("valid JSON map");
    let linear = map["linear"].as_array().expect("row-major linear part");
    assert_eq!(linear.len(), 2);
    assert_eq!(map["translation"].as_array().expect("translation").len(), 2);

    // a query that resolves to "no" still succeeds as a process
    let out = latreg(&["congruent", a.to_str().unwrap(), c.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "not congruent");
}

#[test]
fn symmetries_of_the_square_form_the_dihedral_group() {
    let square = scratch("sym-square.json", SQUARE);
    let out = latreg(&["symmetries", square.to_str().unwrap(), "--emit-matrices"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let (order, json) = text.split_once('\n').expect("order then matrices");
    assert_eq!(order, "order 8");
    let maps: Value = serde_json::from_str(json).expect("valid JSON array");
    assert_eq!(maps.as_array().expect("an array").len(), 8);
}

#[test]
fn verification_is_deterministic_across_worker_counts() {
    let r1 = std::env::temp_dir().join(format!("latreg-cli-{}-v1.json", std::process::id()));
    let r2 = std::env::temp_dir().join(format!("latreg-cli-{}-v2.json", std::process::id()));

    let one = latreg(&[
        "verify-theorem",
        "--max-dim",
        "2",
        "--jobs",
        "1",
        "--report",
        r1.to_str().unwrap(),
    ]);
    let two = latreg(&[
        "verify-theorem",
        "--max-dim",
        "2",
        "--jobs",
        "2",
        "--report",
        r2.to_str().unwrap(),
    ]);
    assert!(one.status.success());
    assert!(two.status.success());

    let text = stdout(&one);
    assert!(text.contains("theorem verification up to dimension 2"));
    assert!(text.contains("entries (7):"));
    assert!(text.contains("result: PASS"));
    assert_eq!(text, stdout(&two), "rendered report is worker-count independent");

    // the JSON reports agree too, once the timings are set aside
    let mut j1: Value = serde_json::from_str(&fs::read_to_string(&r1).unwrap()).unwrap();
    let mut j2: Value = serde_json::from_str(&fs::read_to_string(&r2).unwrap()).unwrap();
    assert_eq!(j1["pass"], true);
    assert_eq!(j1["entries"].as_array().unwrap().len(), 7);
    j1.as_object_mut().unwrap().remove("timings_ms");
    j2.as_object_mut().unwrap().remove("timings_ms");
    assert_eq!(j1, j2);
}

#[test]
fn polygon_sweep_writes_a_passing_report() {
    let report = std::env::temp_dir().join(format!("latreg-cli-{}-sweep.json", std::process::id()));
    let out = latreg(&["classify-2d", "--radius", "2", "--report", report.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("classes (6):"));
    assert!(text.contains("pentagons passing: 0"));
    assert!(text.contains("result: PASS"));

    let json: Value = serde_json::from_str(&fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(json["pass"], true);
    assert_eq!(json["pentagons"], 0);
    let classes = json["classes"].as_array().unwrap();
    assert_eq!(classes.len(), 6);
    assert!(classes.iter().all(|c| c["matched_label"].is_string()));
}

#[test]
fn usage_and_input_problems_exit_with_code_two() {
    let out = latreg(&["volume", "/no/such/file.json"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("latreg:"));

    let out = latreg(&["catalog", "--max-dim", "9"]);
    assert_eq!(out.status.code(), Some(2));

    let bad = scratch("bad.json", r#"{"ambient_dim": 2, "vertices": "nope"}"#);
    let out = latreg(&["volume", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    let out = latreg(&["classify-2d", "--radius", "1"]);
    assert_eq!(out.status.code(), Some(2));
}
