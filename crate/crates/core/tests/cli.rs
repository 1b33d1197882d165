use std::process::{Command, Output};

use satake_kit::realform::RealFormFamily;
use satake_kit::stalks::{sweep, Convention, StalkRecord, StalkTable};
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_satake-kit"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn kostka_example() {
    let out = run(&["kostka", "--type", "a2", "--lambda", "1,1", "--mu", "0,0"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "q + q^2\n");
}

#[test]
fn stalks_csv_example() {
    let out = run(&[
        "stalks", "--family", "lorentz", "--n", "5", "--lmax", "6", "--format", "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("lambda,mu,degree,dim"));
    // m = 2 over k = 0: K = q, degree -8 - 8
    assert!(text.lines().any(|l| l == "2,0,-16,1"));
    let rows: Vec<(i64, i64)> = lines
        .map(|l| {
            let f: Vec<i64> = l.split(',').map(|x| x.parse().unwrap()).collect();
            (f[0], f[1])
        })
        .collect();
    let mut sorted = rows.clone();
    sorted.sort();
    assert_eq!(rows, sorted);
}

#[test]
fn stalks_json_matches_schema_and_library() {
    let out = run(&[
        "stalks",
        "--family",
        "octonionic",
        "--lmax",
        "3",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let records: Vec<StalkRecord> = serde_json::from_slice(&out.stdout).unwrap();
    let table = StalkTable::from_records(&records, Convention::Perverse).unwrap();
    let fam = RealFormFamily::octonionic();
    assert_eq!(table, sweep(&fam, 3, Convention::Perverse).unwrap());
}

#[test]
fn shifted_convention_starts_at_zero() {
    let out = run(&[
        "stalks",
        "--family",
        "lorentz",
        "--n",
        "3",
        "--lmax",
        "4",
        "--convention",
        "shifted",
        "--format",
        "json",
    ]);
    let records: Vec<StalkRecord> = serde_json::from_slice(&out.stdout).unwrap();
    for r in records.iter().filter(|r| r.lambda == r.mu) {
        assert_eq!(r.stalks.len(), 1);
        assert_eq!(r.stalks[0].degree, 0);
    }
}

#[test]
fn graded_and_centralizer_json() {
    let out = run(&[
        "hilbert-check",
        "--family",
        "octonionic",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    for key in ["part1_k", "part1_m", "part2_m", "part2_k", "ext_hilbert"] {
        assert_eq!(v["checks"][key], Value::Bool(true), "{key}");
    }
    assert_eq!(
        v["degree_multisets"]["k_side"],
        serde_json::json!([4, 12, 16, 24])
    );

    let out = run(&[
        "centralizer-check",
        "--family",
        "lorentz",
        "--n",
        "3",
        "--samples",
        "10",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["samples"], 10);
    assert_eq!(v["failures"], serde_json::json!([]));
    assert_eq!(v["equivariance_grid"], 400);
}

#[test]
fn verify_all_octonionic() {
    let out = run(&["verify-all", "--family", "octonionic", "--seed", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.lines().all(|l| !l.starts_with("[FAIL]")));
    assert!(text.trim_end().ends_with("(seed 3)"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["stalks", "--family", "bogus"][..],
        &["stalks", "--family", "lorentz", "--n", "1"],
        &["stalks", "--family", "lorentz", "--n", "3", "--lmax", "-1"],
        &["kostka", "--type", "a2", "--lambda", "1"],
        &["frobnicate"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}
