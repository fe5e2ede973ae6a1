//! End-to-end checks of the command-line surface: output shapes, exit codes,
//! determinism of catalog bodies, and the lossy CSV projection.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eaqmds"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

/// Catalog body with the volatile timestamp field blanked.
fn strip_timestamps(body: &str) -> String {
    body.lines()
        .map(|line| {
            let mut v: serde_json::Value = serde_json::from_str(line).unwrap();
            v["timestamp"] = serde_json::json!("");
            v.to_string()
        })
        .collect::<Vec<_>>()
        .join("\n")
}

#[test]
fn cosets_focused_output() {
    let out = run(&["cosets", "--q", "11", "--n", "20", "--r", "3", "--s", "10"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("C_10 = {10}, skew-symmetric: true"), "{text}");

    let out = run(&["cosets", "--q", "23", "--n", "132", "--r", "4", "--s", "1"]);
    assert!(stdout(&out).contains("partner: C_505"));

    let out = run(&["cosets", "--q", "23", "--n", "132", "--r", "4", "--s", "45"]);
    assert!(stdout(&out).contains("partner: C_21"));
}

#[test]
fn cosets_listing_and_json() {
    let out = run(&["cosets", "--q", "11", "--n", "20", "--r", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("context: q=11 n=20 r=3 rn=60 ord_q2=1"));
    assert!(text.contains("omega: 1 4 7"));
    assert!(text.contains("C_10 = {10}, skew-symmetric"));
    assert!(text.contains("C_1 = {1}, skew-asymmetric, partner C_49"));

    let out = run(&[
        "cosets", "--q", "11", "--n", "20", "--r", "3", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["rn"], 60);
    assert_eq!(v["cosets"].as_array().unwrap().len(), 20);
}

#[test]
fn cosets_invalid_context_exits_one() {
    let out = run(&["cosets", "--q", "11", "--n", "20", "--r", "5"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("does not divide"));
}

#[test]
fn family_single_record_fields() {
    let out = run(&["family", "--family", "1", "--q", "11", "--h", "3", "--d", "7"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["n"], 20);
    assert_eq!(v["k"], 9);
    assert_eq!(v["c_coset"], 1);
    assert_eq!(v["c_oracle"], 1);
    assert_eq!(v["mds_confirmed"], true);
    assert_eq!(v["singleton_slack"], 0);
}

#[test]
fn family_all_counts_and_determinism() {
    let args = ["family", "--family", "2", "--q", "23", "--lambda", "3", "--all"];
    let first = run(&args);
    assert!(first.status.success());
    let second = run(&args);
    let a = strip_timestamps(&stdout(&first));
    let b = strip_timestamps(&stdout(&second));
    assert_eq!(a, b, "identical invocations give identical bodies");
    assert_eq!(a.lines().count(), 17); // d = 13..=29
}

#[test]
fn family_usage_errors() {
    // q not a prime power.
    let out = run(&["family", "--family", "1", "--q", "12", "--h", "3", "--d", "5"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("not a prime power"));
    // Missing both --d and --all.
    let out = run(&["family", "--family", "1", "--q", "11", "--h", "3"]);
    assert_eq!(out.status.code(), Some(1));
    // Wrong parameter flag for the family.
    let out = run(&[
        "family", "--family", "2", "--q", "23", "--h", "3", "--d", "13",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("family 2 needs --lambda") || stderr(&out).contains("--h"));
    // Distance out of range.
    let out = run(&["family", "--family", "1", "--q", "11", "--h", "3", "--d", "9"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("out of the admissible range"));
}

#[test]
fn family_csv_stdout() {
    let out = run(&[
        "family", "--family", "1", "--q", "13", "--h", "7", "--all", "--format", "csv",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "q,n,r,family,parameter,d,k,c_coset,c_oracle,delta_bch,mds_confirmed,singleton_slack,timestamp"
    );
    assert_eq!(text.lines().count(), 1 + 6); // header + d = 2..=7
    assert!(text.lines().nth(1).unwrap().starts_with("13,12,7,1,7,2,"));
}

#[test]
fn verify_empty_catalog() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("empty.ndjson");
    std::fs::write(&path, "").unwrap();
    let out = run(&["verify", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("0 records verified"));
}

#[test]
fn verify_missing_and_corrupt_files() {
    let out = run(&["verify", "/nonexistent/catalog.ndjson"]);
    assert_eq!(out.status.code(), Some(1));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("corrupt.ndjson");
    std::fs::write(&path, "{\"q\": 11\nbroken\n").unwrap();
    let out = run(&["verify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("catalog line 1"));
}

#[test]
fn generate_verify_round_trip_with_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cat.ndjson");
    let p = path.to_str().unwrap();
    let out = run(&[
        "family", "--family", "1", "--q", "19", "--h", "5", "--all", "--out", p,
    ]);
    assert!(out.status.success());
    // Appending a second run doubles the file; verification still passes
    // (records are self-contained).
    let out = run(&[
        "family", "--family", "1", "--q", "19", "--h", "5", "--all", "--out", p,
    ]);
    assert!(out.status.success());
    let body = std::fs::read_to_string(&path).unwrap();
    assert_eq!(body.lines().count(), 18); // 9 distances, twice
    let out = run(&["verify", p]);
    assert!(out.status.success(), "{out:?}");
    assert!(stdout(&out).contains("18 records verified"));
}

#[test]
fn table_unknown_number_is_usage_error() {
    let out = run(&["table", "4"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn table_two_marks_inadmissible_row_and_exits_zero() {
    let out = run(&["table", "2", "--oracle-cap-q", "0", "--mds-budget", "0"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("q=87 lambda=11: inadmissible"));
    assert!(text.contains("not a prime power"));
    assert!(text.contains("0 disagreements"));
}

#[test]
fn table_one_full_agreement() {
    let out = run(&["table", "1", "--oracle-cap-q", "0", "--mds-budget", "0"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("260 cells checked, 0 disagreements"), "{text}");
}

#[test]
fn table_three_instantiates_symbolic_rows() {
    let out = run(&[
        "table", "3", "--max-q", "30", "--oracle-cap-q", "0", "--mds-budget", "0",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    // q = 23 admits both families at this cap.
    assert!(text.contains("q=23 h=3"), "{text}");
    assert!(text.contains("q=23 lambda=3"), "{text}");
    assert!(text.contains("0 disagreements"), "{text}");
}

#[test]
fn help_and_version_exit_zero() {
    assert!(run(&["--help"]).status.success());
    assert!(run(&["--version"]).status.success());
    let out = run(&[]);
    assert_eq!(out.status.code(), Some(1)); // no subcommand is a usage error
}
