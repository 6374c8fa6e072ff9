use std::io::Write;
use std::process::{Command, Output, Stdio};

fn polycomp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polycomp"))
        .args(args)
        .output()
        .unwrap()
}

fn with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_polycomp"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn enumerate_counts() {
    let o = polycomp(&["enumerate", "--q", "12"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 12);
    let o = polycomp(&["enumerate", "--q", "14", "--p", "8"]);
    assert_eq!(stdout(&o).lines().count(), 42);
    assert_eq!(
        o.stdout,
        polycomp(&["enumerate", "--q", "14", "--p", "8"]).stdout
    );
}

#[test]
fn enumerate_rejects_bad_bounds() {
    let o = polycomp(&["enumerate", "--q", "5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("5 edges"));
    assert_eq!(
        polycomp(&["enumerate", "--q", "12", "--p", "9"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(polycomp(&["enumerate", "--q", "15"]).status.code(), Some(2));
    assert_eq!(
        polycomp(&["enumerate", "--q", "12", "--format", "svg"])
            .status
            .code(),
        Some(2)
    );
    let o = polycomp(&[
        "enumerate",
        "--q",
        "15",
        "--max-order",
        "10",
        "--max-size",
        "15",
    ]);
    assert_eq!(stdout(&o).lines().count(), 158);
}

#[test]
fn enumerate_json_and_dot() {
    let o = polycomp(&["enumerate", "--q", "14", "--p", "8", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let entries = v.as_array().unwrap();
    assert_eq!(entries.len(), 42);
    assert!(entries.iter().all(|e| e["schema_version"] == 1));
    assert_eq!(entries[11]["label"], "1408.12");

    let dir = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_polycomp"))
        .args(["enumerate", "--q", "12", "--format", "dot", "--out", "."])
        .env("POLYCOMP_OUT_DIR", dir.path())
        .output()
        .unwrap();
    assert!(o.status.success());
    let mut files: Vec<_> = std::fs::read_dir(dir.path())
        .unwrap()
        .map(|e| e.unwrap().file_name())
        .collect();
    files.sort();
    assert_eq!(files.len(), 12);
    assert_eq!(files[0], "1206.01.dot");
    let dot = std::fs::read_to_string(dir.path().join("1206.01.dot")).unwrap();
    assert!(dot.starts_with("graph \"1206.01\" {"));

    let file = dir.path().join("q11.g6");
    let o = polycomp(&["enumerate", "--q", "11", "--out", file.to_str().unwrap()]);
    assert!(o.status.success() && o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(file).unwrap().lines().count(), 4);
}

#[test]
fn single_graph_utilities() {
    let o = polycomp(&["check", "C~"]);
    let line = stdout(&o);
    assert!(line.contains("polyhedral=true") && line.contains("self_dual=true"));

    let once = with_stdin(&["complement"], "GKL\\UK\nC~\n");
    let twice = with_stdin(&["complement", "-"], &stdout(&once));
    assert_eq!(stdout(&twice), "GKL\\UK\nC~\n");

    let o = polycomp(&["dual", "G?????"]);
    assert_eq!(o.status.code(), Some(2));
    let o = polycomp(&["check", "C~x"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("at byte"));
}

#[test]
fn classify_runs() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("report.json");
    let o = polycomp(&[
        "classify",
        "--no-prune",
        "--report",
        report.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let out = stdout(&o);
    assert!(out.contains("\n3 solutions\n"));
    assert!(out.contains("identical solution certificates"));
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(report).unwrap()).unwrap();
    assert_eq!(v["candidate_rows"].as_array().unwrap().len(), 3);
}
