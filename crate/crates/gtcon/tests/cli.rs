//! End-to-end tests of the command-line interface: exit codes, pipelines,
//! distinct validation errors, and byte-identical reports.

use std::io::Write;
use std::process::{Command, Output, Stdio};

const BIN: &str = env!("CARGO_BIN_EXE_gtcon");

const NEQ3: &str =
    r#"{"minus":["0","1","2"],"plus":["0","1","2"],"rel":[[0,1,1],[1,0,1],[1,1,0]]}"#;
const EQ2: &str = r#"{"minus":["0","1"],"plus":["0","1"],"rel":[[1,0],[0,1]]}"#;

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().expect("spawn")
}

fn run_with_stdin(args: &[&str], input: &[u8]) -> Output {
    let mut child = Command::new(BIN)
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn");
    child.stdin.take().unwrap().write_all(input).unwrap();
    child.wait_with_output().expect("wait")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("report is a single object")
}

fn write_temp(dir: &tempfile::TempDir, name: &str, content: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, content).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn norm_reports_value_and_cover() {
    let dir = tempfile::tempdir().unwrap();
    let rel = write_temp(&dir, "neq3.rel", NEQ3);
    let out = run(&["norm", &rel]);
    assert!(out.status.success());
    let report = stdout_json(&out);
    assert_eq!(report["verb"], "norm");
    assert_eq!(report["result"]["norm"], 2);
    assert_eq!(report["witness"]["cover"], serde_json::json!([0, 1]));
    assert!(report["elapsed_ms"].is_null());
}

#[test]
fn old_product_pipes_into_norm() {
    let dir = tempfile::tempdir().unwrap();
    let rel = write_temp(&dir, "neq3.rel", NEQ3);
    let constructed = run(&["oldprod", &rel, &rel]);
    assert!(constructed.status.success());
    let piped = run_with_stdin(&["norm", "-"], &constructed.stdout);
    assert!(piped.status.success());
    assert_eq!(stdout_json(&piped)["result"]["norm"], 3);
    // The constructed relation carries provenance naming its factors.
    let rel_json: serde_json::Value = serde_json::from_slice(&constructed.stdout).unwrap();
    assert!(rel_json["provenance"]
        .as_str()
        .unwrap()
        .contains("old_product"));
}

#[test]
fn verify_distinguishes_pass_and_fail() {
    let dir = tempfile::tempdir().unwrap();
    write_temp(&dir, "eq2.rel", EQ2);
    write_temp(&dir, "neq3.rel", NEQ3);
    let good = write_temp(
        &dir,
        "good.mor",
        r#"{"source":"eq2.rel","target":"neq3.rel","minus_map":[0,1,0],"plus_map":[1,0]}"#,
    );
    let bad = write_temp(
        &dir,
        "bad.mor",
        r#"{"source":"eq2.rel","target":"neq3.rel","minus_map":[0,1,0],"plus_map":[0,1]}"#,
    );
    let out = run(&["verify", &good]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["result"], "pass");
    let out = run(&["verify", &bad]);
    assert_eq!(out.status.code(), Some(1));
    let report = stdout_json(&out);
    assert_eq!(report["result"], "fail");
    assert_eq!(report["witness"]["b"], 0);
    assert_eq!(report["witness"]["a"], 0);
}

#[test]
fn search_exit_codes_reflect_outcome() {
    let dir = tempfile::tempdir().unwrap();
    let neq3 = write_temp(&dir, "neq3.rel", NEQ3);
    let eq2 = write_temp(&dir, "eq2.rel", EQ2);
    let found = run(&["search", &eq2, &neq3]);
    assert_eq!(found.status.code(), Some(0));
    assert_eq!(stdout_json(&found)["result"], "found");
    let none = run(&["search", &neq3, &eq2]);
    assert_eq!(none.status.code(), Some(1));
    assert_eq!(stdout_json(&none)["result"], "none");
}

#[test]
fn validation_errors_exit_2_with_distinct_messages() {
    let dir = tempfile::tempdir().unwrap();
    // File not found.
    let out = run(&["norm", "no-such-file.rel"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cannot read"));
    // Schema violation (inadmissible relation).
    let bad = write_temp(&dir, "bad.rel", r#"{"minus":["0"],"plus":["0"],"rel":[[1]]}"#);
    let out = run(&["norm", &bad]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error:"));
    // Cap exceeded.
    let rel = write_temp(&dir, "neq3.rel", NEQ3);
    let out = run(&["search", &rel, &rel, "--cap", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap"));
    // Unknown catalog entry.
    let out = run(&["catalog", "nope"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown catalog entry"));
    // Unknown sweep suite.
    let out = run(&["sweep", "bogus"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown sweep suite"));
    // Bad arguments (clap) also exit 2.
    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn seeded_reports_are_byte_identical() {
    let args = ["catalog", "s_le_d", "--sweep", "40", "--seed", "7"];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    let args = ["sweep", "engulf-lemma", "--n", "10", "--seed", "1"];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn catalog_listing_names_all_entries() {
    let out = run(&["catalog"]);
    assert!(out.status.success());
    let names: Vec<String> = stdout_json(&out)["result"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["name"].as_str().unwrap().to_string())
        .collect();
    assert_eq!(names, ["s_le_d", "addcov", "addb", "maxmin", "r3"]);
}

#[test]
fn dual_of_dual_round_trips_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let rel = write_temp(&dir, "neq3.rel", NEQ3);
    let once = run(&["dual", &rel]);
    assert!(once.status.success());
    let twice = run_with_stdin(&["dual", "-"], &once.stdout);
    assert!(twice.status.success());
    let back: serde_json::Value = serde_json::from_slice(&twice.stdout).unwrap();
    let original: serde_json::Value = serde_json::from_str(NEQ3).unwrap();
    assert_eq!(back["rel"], original["rel"]);
}
