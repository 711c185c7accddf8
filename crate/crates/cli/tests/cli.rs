use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

const B1: &str = r#"{"v":7,"blocks":[[0,1,3],[1,2,4],[2,3,5],[3,4,6],[0,4,5],[1,5,6],[0,2,6]]}"#;

fn fano(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fano"))
        .args(args)
        .env("NO_COLOR", "1")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path.to_str().unwrap().to_string()
}

fn json(o: &Output) -> Value {
    serde_json::from_str(&stdout(o)).expect("stdout is JSON")
}

#[test]
fn verify_all_reports_named_checks() {
    let out = fano(&["verify-all", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let reports = json(&out);
    let find = |name: &str| {
        reports
            .as_array()
            .unwrap()
            .iter()
            .find(|r| r["check"] == name)
            .cloned()
            .unwrap_or_else(|| panic!("missing check {name}"))
    };
    let aut = find("orthogonal-aut-order-21");
    assert_eq!(aut["status"], "PASS");
    assert_eq!(aut["witness"]["order"], 21);
    let comp = find("triangular-completions-2");
    assert_eq!(comp["witness"]["count"], 2);
    assert!(reports.as_array().unwrap().iter().all(|r| r["status"] == "PASS"));
    assert!(reports[0].get("millis").is_none());
}

#[test]
fn verify_all_text_is_deterministic_and_uncoloured() {
    let a = fano(&["verify-all"]);
    let b = fano(&["verify-all"]);
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert!(!text.contains('\x1b'));
    assert!(text.ends_with("14/14 checks passed\n"));
}

#[test]
fn enumerate_from_files() {
    let dir = tempfile::tempdir().unwrap();
    let b1 = write(dir.path(), "b1.json", B1);
    let mates = fano(&["enumerate", "mates", "--design", &b1, "--format", "json"]);
    assert_eq!(mates.status.code(), Some(0));
    assert_eq!(json(&mates).as_array().unwrap().len(), 8);
    let circuits = fano(&["enumerate", "circuits", "--design", &b1, "--format", "json"]);
    assert_eq!(json(&circuits).as_array().unwrap().len(), 24);
    let orientations = fano(&["enumerate", "orientations", "--design", &b1]);
    assert!(stdout(&orientations).starts_with("8 orientations\n"));
}

#[test]
fn parallel_classes_of_sts61() {
    let out = fano(&["enumerate", "parallel-classes", "--builtin", "sts61"]);
    let text = stdout(&out);
    assert!(text.starts_with("7 parallel classes\n"));
    assert!(text.contains("inf"));
    let dir = tempfile::tempdir().unwrap();
    let design = fano(&["enumerate", "parallel-classes", "--builtin", "sts61", "--format", "json"]);
    assert_eq!(json(&design).as_array().unwrap().len(), 7);
    let odd = write(dir.path(), "b1.json", B1);
    let err = fano(&["enumerate", "parallel-classes", "--design", &odd]);
    assert_eq!(err.status.code(), Some(1));
}

#[test]
fn malformed_json_exits_2_with_position() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.json", "{\"v\":7,\n \"blocks\": [[0,1,3],\n");
    let out = fano(&["enumerate", "mates", "--design", &bad]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("bad.json:3:"), "{}", stderr(&out));
}

#[test]
fn missing_file_exits_2() {
    let out = fano(&["enumerate", "mates", "--design", "/nonexistent/b1.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn invalid_design_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    let twice = write(
        dir.path(),
        "twice.json",
        r#"{"v":7,"blocks":[[0,1,3],[1,2,4],[1,3,4],[3,4,6],[0,4,5],[1,5,6],[0,2,6]]}"#,
    );
    let out = fano(&["enumerate", "mates", "--design", &twice]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("invalid design"), "{}", stderr(&out));
}

#[test]
fn classical_faces() {
    let out = fano(&["faces", "--builtin", "classical-rotation", "--format", "json"]);
    let v = json(&out);
    assert_eq!(v["faces"].as_array().unwrap().len(), 14);
    assert_eq!(v["euler_characteristic"], 0);
    assert_eq!(v["coloring"]["class_a"][0], serde_json::json!([0, 1, 3]));
    let dot = stdout(&fano(&["faces", "--dot"]));
    assert!(dot.starts_with("graph K7 {"));
    assert!(dot.contains("// face"));
}

#[test]
fn rotation_with_split_cycle_names_vertex_0() {
    let dir = tempfile::tempdir().unwrap();
    let rot = write(
        dir.path(),
        "rot.json",
        r#"{"n":7,"rotation":{"0":"(1 5 4)(6 2 3)","1":[0,3,4,2,6,5],"2":[0,6,1,4,5,3],
           "3":[0,2,5,6,4,1],"4":[0,5,2,1,3,6],"5":[0,1,6,3,2,4],"6":[0,4,3,5,1,2]}}"#,
    );
    let out = fano(&["faces", "--rotation", &rot]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("rotation at 0"), "{}", stderr(&out));
}

#[test]
fn classify_completions() {
    let out = fano(&["classify", "--rho0", "(1 5 4 6 2 3)", "--format", "json"]);
    let rows = json(&out);
    assert_eq!(rows.as_array().unwrap().len(), 2);
    assert!(rows.as_array().unwrap().iter().any(|r| r["kind"] == "Reversing"));
    let single = fano(&["classify"]);
    assert_eq!(stdout(&single), "witness () (Preserving)\n");
}

#[test]
fn automorphism_groups() {
    let sts = fano(&["aut", "--builtin", "sts61", "--format", "json"]);
    assert_eq!(json(&sts)["order"], 21);
    assert_eq!(json(&sts)["kind"], "Frobenius21");
    let fano_plane = fano(&["aut", "--builtin", "b1", "--format", "json"]);
    assert_eq!(json(&fano_plane)["order"], 168);
    let oriented = fano(&["aut", "--builtin", "qr-orientation", "--format", "json"]);
    assert_eq!(json(&oriented)["order"], 21);
    let rotation = fano(&["aut", "--builtin", "classical-rotation", "--format", "json"]);
    assert_eq!(json(&rotation)["order"], 42);
    assert_eq!(json(&rotation)["color_preserving_order"], 21);
}

#[test]
fn octonion_table_formats() {
    let text = stdout(&fano(&["octonion-table"]));
    assert!(text.lines().nth(1).unwrap().starts_with("  e1   -1  +e4"));
    let table = json(&fano(&["octonion-table", "--format", "json"]));
    assert_eq!(table[0][1], serde_json::json!([1, 4]));
    assert_eq!(table[1][0], serde_json::json!([-1, 4]));
}
