use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hamcheck"))
}

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn tmp(name: &str) -> PathBuf {
    Path::new(env!("CARGO_TARGET_TMPDIR")).join(name)
}

#[test]
fn check_exit_codes_follow_the_verdict() {
    for (file, code) in [
        ("sphere.json", 0),
        ("cp2.json", 0),
        ("dim6_pair.json", 1),
        ("single_point.json", 2),
    ] {
        let o = run(&["check", data(file).to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(code), "{file}: {}", stdout(&o));
    }
}

#[test]
fn check_json_report() {
    let o = run(&["check", "--format", "json", data("dim6_pair.json").to_str().unwrap()]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["n"], 3);
    let report = &v["report"];
    assert_eq!(report["chi"], serde_json::json!([0, -1, 1, 0]));
    assert_eq!(report["index_histogram"], serde_json::json!([0, 1, 1, 0]));
    assert_eq!(report["summary"]["verdict"], "non_hamiltonian_candidate");
    assert_eq!(report["summary"]["exit_code"], 1);
}

#[test]
fn check_reads_stdin_and_runs_the_oracle() {
    let mut child = bin()
        .args(["check", "--format", "json", "--order-oracle", "12", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(br#"{"n":2,"fixed_points":[{"weights":[1,2]},{"weights":[-1,1]},{"weights":[-2,-1]}]}"#)
        .unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["report"]["oracle"]["agrees"], true);
    assert_eq!(v["report"]["chi"], serde_json::json!([1, -1, 1]));
}

#[test]
fn json_output_is_byte_identical_across_runs() {
    let path = data("cp2.json");
    let args = ["check", "--format", "json", path.to_str().unwrap()];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let search = ["search", "--dim", "6", "--points", "2", "--max-weight", "4"];
    assert_eq!(run(&search).stdout, run(&search).stdout);
}

#[test]
fn search_survivors_round_trip_through_check() {
    let out = tmp("search_dim6.jsonl");
    let o = run(&[
        "search",
        "--dim",
        "6",
        "--points",
        "2",
        "--max-weight",
        "5",
        "--mode",
        "non-hamiltonian",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&out).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    let (summary, survivors) = lines.split_last().unwrap();
    let summary: Value = serde_json::from_str(summary).unwrap();
    assert_eq!(summary["summary"]["survivors"], 6);
    assert_eq!(survivors.len(), 6);
    for (k, line) in survivors.iter().enumerate() {
        let v: Value = serde_json::from_str(line).unwrap();
        let verdict = v["report"]["summary"]["verdict"].clone();
        let path = tmp(&format!("survivor_{k}.json"));
        std::fs::write(&path, line).unwrap();
        let again = run(&["check", "--format", "json", path.to_str().unwrap()]);
        assert_eq!(again.status.code(), Some(1));
        let w: Value = serde_json::from_str(&stdout(&again)).unwrap();
        assert_eq!(w["report"]["summary"]["verdict"], verdict);
        assert_eq!(w["report"], v["report"]);
    }
}

#[test]
fn surface_search_finds_the_rotations() {
    let o = run(&["search", "--dim", "2", "--points", "2", "--max-weight", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<Value> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    let (summary, survivors) = lines.split_last().unwrap();
    assert_eq!(summary["summary"]["survivors"], 3);
    for s in survivors {
        assert_eq!(s["report"]["summary"]["verdict"], "hamiltonian");
    }
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(run(&["search", "--dim", "3", "--points", "2", "--max-weight", "2"]).status.code(), Some(64));
    assert_eq!(
        run(&["search", "--dim", "4", "--points", "2", "--max-weight", "2", "--mode", "odd"]).status.code(),
        Some(64)
    );
    let path = data("sphere.json");
    assert_eq!(
        run(&["criteria", path.to_str().unwrap(), "--only", "no_such_criterion"]).status.code(),
        Some(64)
    );
    let bad = tmp("ragged.json");
    std::fs::write(&bad, r#"{"n":2,"fixed_points":[{"weights":[1]}]}"#).unwrap();
    let o = run(&["check", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(64));
    assert!(String::from_utf8_lossy(&o.stderr).contains("expected 2"));
}

#[test]
fn criteria_only_selects() {
    let path = data("dim6_pair.json");
    let o = run(&[
        "criteria",
        path.to_str().unwrap(),
        "--only",
        "godinho_condition,pairing_ladder",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let names: Vec<&str> = v["criteria"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert_eq!(names[0], "godinho_condition");
    assert!(names.len() >= 2);
    assert!(names[1..].iter().all(|n| *n == "pairing_ladder"));
}
