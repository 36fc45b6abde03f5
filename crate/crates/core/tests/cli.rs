//! End-to-end runs of the `tetra` binary.

use std::process::{Command, Output};

use tempfile::TempDir;

fn tetra(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tetra")).args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn verify_dims_and_simples() {
    let out = tetra(&["verify", "--checks", "dims,simples"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    assert!(text.starts_with("tetra verification report\nschema: 1\n"));
    assert!(text.contains("dims.dim: 72"));
    assert!(text.contains("overall: pass (2/2 checks)"));
}

#[test]
fn verify_degenerate_parameter_reports_no_period() {
    let out = tetra(&["verify", "--lambda", "0", "--checks", "simples"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("period: none"), "{text}");
    assert!(text.contains("omega2_top_S1: 3"), "{text}");
}

#[test]
fn verify_m3_over_rationals() {
    let out = tetra(&["verify", "--m", "3", "--field", "q", "--checks", "dims,symmetry"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("dims.dim: 108"));
}

#[test]
fn emitted_presentations_verify() {
    let dir = TempDir::new().unwrap();
    for (family, dim) in [("lambda", 72), ("omega", 165), ("gamma", 18)] {
        let path = dir.path().join(format!("{family}.pres"));
        let emitted = tetra(&["emit", "--family", family, "--out", path.to_str().unwrap()]);
        assert_eq!(emitted.status.code(), Some(0));
        let out = tetra(&["verify", "--checks", "dims", "--presentation", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
        assert!(stdout(&out).contains(&format!("dims.dim: {dim}")), "{family}: {}", stdout(&out));
    }
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(tetra(&["verify", "--m", "1"]).status.code(), Some(2));
    assert_eq!(tetra(&["verify", "--checks", "bogus"]).status.code(), Some(2));
    assert_eq!(tetra(&["verify", "--field", "fp:12"]).status.code(), Some(2));
    assert_eq!(tetra(&["frobnicate"]).status.code(), Some(2));
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("broken.pres");
    std::fs::write(&path, "field fp:1000003\nbound 6\nvertices a\narrow x a a\nrelation x * * x\n").unwrap();
    let out = tetra(&["verify", "--presentation", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 5"));
}

#[test]
fn reports_are_reproducible() {
    let dir = TempDir::new().unwrap();
    let (a, b) = (dir.path().join("a.txt"), dir.path().join("b.txt"));
    for path in [&a, &b] {
        let out = tetra(&["verify", "--checks", "dims,symmetry,simples", "--out", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
        assert!(out.stdout.is_empty());
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}
