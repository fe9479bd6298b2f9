//! End-to-end runs of the compiled binary: flag handling, exit codes, and
//! frozen output shapes.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sidon-c4"))
        .args(args)
        .output()
        .expect("binary must run")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn build_q3_prints_the_set() {
    let out = run(&["build", "--q", "3"]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("q = 3 (p = 3, e = 1)"), "got: {text}");
    assert!(text.contains("modulus = x^2 + 1"), "got: {text}");
    assert!(text.contains("theta = x + 1"), "got: {text}");
    assert!(text.contains("|A| = 3"), "got: {text}");
    assert!(text.contains("A = {1, 6, 7}"), "got: {text}");
    assert!(text.contains("t = 1"), "got: {text}");
}

#[test]
fn build_rejects_even_q() {
    let out = run(&["build", "--q", "4"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("4"));
}

#[test]
fn build_q9_reports_set_size() {
    let out = run(&["build", "--q", "9"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("|A| = 9"));
}

#[test]
fn build_exports_residues() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("a3.txt");
    let out = run(&["build", "--q", "3", "--export", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "1\n6\n7\n");
}

#[test]
fn excise_q13_certificate() {
    let out = run(&["excise", "--q", "13"]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("certificate q = 13 (p = 13, e = 1)"), "got: {text}");
    assert!(text.contains("n_after = 154"), "got: {text}");
    assert!(text.contains("k = 4"), "got: {text}");
    assert!(text.contains("verdict: all checks passed"), "got: {text}");
}

#[test]
fn excise_q3_is_capped_and_exports() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("excised.txt");
    let out = run(&["excise", "--q", "3", "--export", path.to_str().unwrap()]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    assert!(stdout(&out).contains("capped = true"));
    assert_eq!(
        std::fs::read_to_string(&path).unwrap(),
        "# sidon-c4 q=3 n=4 m=1\n4 5\n"
    );
}

#[test]
fn sweep_writes_csv_with_one_row_per_prime_power() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sweep.csv");
    let out = run(&["sweep", "--q-min", "3", "--q-max", "31", "--out", path.to_str().unwrap()]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    assert!(stderr(&out).contains("sweep complete: 13 rows, 0 failures"));
    let csv = std::fs::read_to_string(&path).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines.len(), 14);
    assert!(lines[0].starts_with("q,p,e,n_before,"));
    let qs: Vec<&str> = lines[1..].iter().map(|l| l.split(',').next().unwrap()).collect();
    assert_eq!(qs, vec!["3", "5", "7", "9", "11", "13", "17", "19", "23", "25", "27", "29", "31"]);
}

#[test]
fn sweep_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let first = dir.path().join("first.csv");
    let second = dir.path().join("second.csv");
    for path in [&first, &second] {
        let out = run(&["sweep", "--q-min", "3", "--q-max", "13", "--out", path.to_str().unwrap()]);
        assert!(out.status.success());
    }
    assert_eq!(
        std::fs::read(&first).unwrap(),
        std::fs::read(&second).unwrap(),
        "identical invocations must produce byte-identical CSV"
    );
}

#[test]
fn sweep_to_stdout_keeps_summary_on_stderr() {
    let out = run(&["sweep", "--q-min", "3", "--q-max", "5"]);
    assert!(out.status.success());
    let csv = stdout(&out);
    assert_eq!(csv.lines().count(), 3);
    assert!(!csv.contains("sweep complete"));
    assert!(stderr(&out).contains("sweep complete: 2 rows, 0 failures"));
}

#[test]
fn sweep_rejects_bad_ranges() {
    let inverted = run(&["sweep", "--q-min", "10", "--q-max", "4"]);
    assert_eq!(inverted.status.code(), Some(2));
    let below = run(&["sweep", "--q-min", "2", "--q-max", "13"]);
    assert_eq!(below.status.code(), Some(2));
}

#[test]
fn resource_guard_requires_explicit_override() {
    let out = run(&["build", "--q", "1025"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--unsafe-large"));
    let sweep = run(&["sweep", "--q-min", "3", "--q-max", "2000"]);
    assert_eq!(sweep.status.code(), Some(2));
}

#[test]
fn generator_index_changes_the_set() {
    let default = run(&["build", "--q", "5"]);
    let alternate = run(&["build", "--q", "5", "--generator-index", "1"]);
    assert!(default.status.success() && alternate.status.success());
    assert!(stdout(&default).contains("|A| = 5"));
    assert!(stdout(&alternate).contains("|A| = 5"));
    assert_ne!(stdout(&default), stdout(&alternate));
}

#[test]
fn generator_index_out_of_range_is_usage_error() {
    // GF(q^2) has phi(q^2 - 1) generators; for q = 3 that is phi(8) = 4.
    let out = run(&["build", "--q", "3", "--generator-index", "4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_flag_is_usage_error() {
    let out = run(&["build", "--q", "3", "--frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}
