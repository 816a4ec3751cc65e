//! End-to-end checks of the `moma` binary: exit codes, JSON shape, byte
//! determinism, and the `.scx` path.

use std::io::Write;
use std::process::{Command, Output};

fn moma(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_moma"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn flag_pentagon_exits_zero() {
    let out = moma(&["flag", "@pentagon"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["flag"], serde_json::json!(true));
}

#[test]
fn negative_verdict_exits_one() {
    let out = moma(&["aspherical", "@pentagon", "--pair", "complex"]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["failed"], serde_json::json!(["ii"]));
}

#[test]
fn reads_scx_files() {
    let dir = std::env::temp_dir();
    let path = dir.join("moma-cli-test-square.scx");
    let mut f = std::fs::File::create(&path).unwrap();
    writeln!(f, "# a square\nvertices 4\nf 1 2\nf 2 3\nf 3 4\nf 4 1").unwrap();
    let out = moma(&["rk", "euler", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["euler"], serde_json::json!(0));
    assert_eq!(v["agree"], serde_json::json!(true));
    std::fs::remove_file(path).ok();
}

#[test]
fn malformed_scx_reports_line() {
    let dir = std::env::temp_dir();
    let path = dir.join("moma-cli-test-bad.scx");
    std::fs::write(&path, "vertices 3\nf 1 oops\n").unwrap();
    let out = moma(&["flag", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 2"), "stderr: {err}");
    std::fs::remove_file(path).ok();
}

#[test]
fn capacity_exits_three() {
    let out = moma(&["davis", "ball", "@pentagon", "--radius", "40"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn env_caps_are_honored() {
    let out = Command::new(env!("CARGO_BIN_EXE_moma"))
        .args(["racg", "growth", "@boundary-simplex:1", "--radius", "10"])
        .env("MOMA_MAX_RADIUS", "12")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(
        v["sphere_sizes"],
        serde_json::json!([1, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2])
    );
}

#[test]
fn output_bytes_are_stable() {
    for args in [
        vec!["rk", "build", "@boundary-simplex:2"],
        vec!["davis", "ball", "@boundary-simplex:1", "--radius", "2"],
        vec!["rk", "homology", "@pentagon"],
        vec!["catalog", "skeleton:5:1"],
    ] {
        let a = moma(&args);
        let b = moma(&args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn catalog_pipes_back_in() {
    let out = moma(&["catalog", "cycle:6"]);
    assert_eq!(out.status.code(), Some(0));
    let dir = std::env::temp_dir();
    let path = dir.join("moma-cli-test-cycle6.scx");
    std::fs::write(&path, &out.stdout).unwrap();
    let round = moma(&["sphere-check", path.to_str().unwrap()]);
    assert_eq!(round.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&round.stdout).unwrap();
    assert_eq!(v["verdict"], serde_json::json!("yes"));
    std::fs::remove_file(path).ok();
}

#[test]
fn davis_cover_report_shape() {
    let out = moma(&["davis", "cover", "@simplex:2", "--radius", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["well_defined"]["pass"], serde_json::json!(true));
    assert_eq!(v["surjectivity"]["pass"], serde_json::json!(true));
    assert_eq!(v["interior_links"]["pass"], serde_json::json!(true));
}
