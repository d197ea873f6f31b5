use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_nonassoc"));
    c.env_remove("NONASSOC_BUDGET");
    c
}

fn xyz() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("examples/xyz.alg")
}

fn run(args: &[&str]) -> (i32, String) {
    let Output { status, stdout, stderr } = bin().args(args).output().unwrap();
    let mut text = String::from_utf8(stdout).unwrap();
    text.push_str(&String::from_utf8(stderr).unwrap());
    (status.code().unwrap(), text)
}

fn write_alg(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn analyze_reports_xyz_invariants() {
    let (code, out) = run(&["analyze", xyz().to_str().unwrap()]);
    assert_eq!(code, 0);
    for line in ["solvable: yes (index 4)", "nilpotent: no", "supersolvable: no", "frattini ideal: span{y, z}"] {
        assert!(out.contains(line), "{line} missing from\n{out}");
    }
}

#[test]
fn analyze_over_rationals_marks_enumeration_unsupported() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_alg(&dir, "q.alg", "field Q\ndim 2\nbasis e1 e2\ne1*e1 = e2\n");
    let (code, out) = run(&["analyze", &f]);
    assert_eq!(code, 0);
    assert!(out.contains("nilpotent: yes (index 3)"));
    assert!(out.contains("ideals: unsupported over Q"));

    let z = write_alg(&dir, "zero.alg", "field GF 2\ndim 0\n");
    let (code, out) = run(&["analyze", &z]);
    assert_eq!(code, 0);
    assert!(out.contains("abelian: yes") && out.contains("ideals: 1"));
}

#[test]
fn membership_exit_codes() {
    let x = xyz();
    let x = x.to_str().unwrap();
    let (code, out) = run(&["member", "--class", "EPhi(nilpotent)", x]);
    assert_eq!(code, 0);
    assert!(out.contains("span{y, z}"));
    assert_eq!(run(&["member", "--class", "nilpotent", x]).0, 1);
    assert_eq!(run(&["member", "--class", "S(nilpotent)", x]).0, 3);
    assert_eq!(run(&["member", "--class", "S(", x]).0, 2);

    let dir = tempfile::tempdir().unwrap();
    let f = write_alg(&dir, "sq.alg", "field GF 2\ndim 2\nbasis e1 e2\ne1*e1 = e2\n");
    assert_eq!(run(&["member", "--class", "prod(abelian,abelian)", &f]).0, 0);
    let q = write_alg(&dir, "q.alg", "field Q\ndim 2\nbasis e1 e2\ne1*e1 = e2\n");
    assert_eq!(run(&["member", "--class", "E(abelian)", &q]).0, 3);
    assert_eq!(run(&["member", "--class", "abelian", &q]).0, 1);
}

#[test]
fn residual_projectors_frattini_series() {
    let x = xyz();
    let x = x.to_str().unwrap();
    let (code, out) = run(&["residual", "--class", "nilpotent", x]);
    assert_eq!(code, 0);
    assert!(out.contains("residual: span{y, z}"));
    let (code, out) = run(&["projectors", "--class", "nilpotent", x]);
    assert_eq!(code, 1);
    assert!(out.contains("no projectors") && out.contains("C0 = span{y, z}"), "{out}");
    assert!(run(&["frattini", x]).1.contains("frattini ideal: span{y, z}"));
    let (_, out) = run(&["series", x]);
    assert!(out.contains("3: dim 1 span{z}") && out.contains("solvability index: 4"));
}

#[test]
fn check_suites() {
    assert_eq!(run(&["check", "--suite", "xyz-example"]).0, 0);
    assert_eq!(run(&["check", "--suite", "pullback-kernel", "--dim", "1"]).0, 0);
    let (code, out) = run(&["check", "--suite", "no-such"]);
    assert_eq!(code, 2, "{out}");
    assert_eq!(run(&["check"]).0, 2);
}

#[test]
fn operator_calculus_commands() {
    let (code, out) = run(&["ops", "--closure", "EPhi.Q"]);
    assert_eq!(code, 0);
    assert!(out.contains("provable") && out.contains("Frattini"));
    assert_eq!(run(&["ops", "--derive", "D0 <= R0"]).0, 0);
    let (code, out) = run(&["ops", "--derive", "Q <= S"]);
    assert_eq!(code, 1);
    assert!(out.contains("unknown"));
    assert_eq!(run(&["ops", "--falsify", "Q.EPhi <= EPhi.Q"]).0, 0);
    assert_eq!(run(&["ops", "--falsify", "S <= Sn"]).0, 1);
    assert_eq!(run(&["ops", "--falsify", "L <= S"]).0, 3);
}

#[test]
fn enumerate_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.txt");
    let b = dir.path().join("b.txt");
    for p in [&a, &b] {
        assert_eq!(run(&["enumerate", "--dim", "2", "--field", "2", "--out", p.to_str().unwrap()]).0, 0);
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    let s1 = run(&["enumerate", "--dim", "3", "--mode", "sampled", "--seed", "9", "--count", "5"]);
    let s2 = run(&["enumerate", "--dim", "3", "--mode", "sampled", "--seed", "9", "--count", "5"]);
    assert_eq!(s1, s2);
    assert_eq!(run(&["enumerate", "--dim", "3", "--field", "Q"]).0, 3);
}

#[test]
fn budget_flags_and_environment() {
    let x = xyz();
    let x = x.to_str().unwrap();
    let (_, out) = run(&["analyze", "--max-enum-bits", "2", x]);
    assert!(out.contains("ideals: skipped"), "{out}");
    let out = bin().env("NONASSOC_BUDGET", "max_enum_bits=2").args(["analyze", x]).output().unwrap();
    assert!(String::from_utf8(out.stdout).unwrap().contains("ideals: skipped"));
    let out = bin().env("NONASSOC_BUDGET", "bogus").args(["analyze", x]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}
