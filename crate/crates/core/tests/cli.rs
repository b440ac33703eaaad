//! End-to-end checks of the `coiso` binary: exit codes, output routing and
//! machine-readable formats.

use std::process::{Command, Output};

fn coiso(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coiso"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

#[test]
fn roots_lists_every_root() {
    let o = coiso(&["roots", "B2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let roots = v.as_array().or_else(|| v["roots"].as_array()).unwrap();
    assert_eq!(roots.len(), 8);
}

#[test]
fn unknown_type_is_usage_error() {
    let o = coiso(&["roots", "Z9"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
    assert!(!o.stderr.is_empty());
}

#[test]
fn bad_flag_is_usage_error() {
    assert_eq!(coiso(&["roots", "A2", "--bogus"]).status.code(), Some(2));
    assert_eq!(coiso(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        coiso(&["coiso", "A2", "--u", "s7", "--v", "e"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn short_root_is_rejected_for_zambon() {
    // a1+a2 is short in B2
    let o = coiso(&["zambon", "B2", "--beta", "a1+a2", "--sign", "-"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn help_exits_zero() {
    let o = coiso(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("verify"));
}

#[test]
fn csv_summary_goes_to_stderr() {
    let o = coiso(&["pairs", "A2", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let mut rdr = csv::Reader::from_reader(o.stdout.as_slice());
    assert_eq!(rdr.records().count(), 36);
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("17 disjoint"), "{err}");
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("coiso-out-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("roots.json");
    let o = coiso(&[
        "--out",
        path.to_str().unwrap(),
        "roots",
        "G2",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    let direct = stdout(&coiso(&["roots", "G2", "--format", "json"]));
    assert_eq!(written, direct);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn coiso_reports_lagrangian_candidate() {
    let o = coiso(&[
        "coiso", "A2", "--V", "h", "--u", "s1", "--v", "s2", "--recipe", "l", "--format", "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["lagrangian"], true);
    assert_eq!(v["coisotropic"], true);
    assert_eq!(v["rank_pi"], 0);
}

#[test]
fn zambon_closed_form_matches() {
    let o = coiso(&[
        "zambon", "G2", "--beta", "highest", "--sign", "-", "--format", "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["closed_form_match"], true);
    assert_eq!(v["coisotropic"], true);
    assert_eq!(v["dim"].as_u64().unwrap() % 2, 0);
}

#[test]
fn verify_text_is_deterministic_across_seeds_flag() {
    let a = coiso(&["verify", "A1", "--seed", "3", "--format", "text"]);
    let b = coiso(&["verify", "A1", "--seed", "3", "--format", "text"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}
