//! End-to-end checks of the mahonian binary: exit codes, formats, and
//! byte-determinism across worker counts.

use std::process::{Command, Output};

fn mahonian(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mahonian"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = mahonian(args);
    assert!(
        out.status.success(),
        "{args:?} exited {:?}: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn enumerate_counts_and_order() {
    let out = stdout_of(&["enumerate", "--n", "3", "--k", "1"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 18);
    assert_eq!(lines[0], "* 1 2");

    let single = stdout_of(&["enumerate", "--n", "1", "--k", "1"]);
    assert_eq!(single.trim(), "*");

    let perms = stdout_of(&["enumerate", "--n", "2", "--k", "0"]);
    assert_eq!(perms.lines().collect::<Vec<_>>(), vec!["1 2", "2 1"]);
}

#[test]
fn enumerate_json_and_digraphs() {
    let json = stdout_of(&["enumerate", "--n", "2", "--k", "1", "--format", "json"]);
    assert_eq!(
        json.lines().collect::<Vec<_>>(),
        vec!["[0,1]", "[0,2]", "[1,0]", "[2,0]"]
    );
    let digraphs = stdout_of(&["enumerate", "--n", "2", "--k", "2", "--as", "digraph"]);
    assert_eq!(digraphs.trim(), r#"{"n":2,"succ":{}}"#);
    let dot = stdout_of(&[
        "enumerate",
        "--n",
        "1",
        "--k",
        "0",
        "--as",
        "digraph",
        "--format",
        "dot",
    ]);
    assert!(dot.contains("digraph laguerre"));
    assert!(dot.contains("1 -> 1;"));
}

#[test]
fn stats_of_the_worked_example() {
    let text = stdout_of(&["stats", "--word", "3 2 5 * 1 8 6 *"]);
    assert!(text.contains("inv=12"));
    assert!(text.contains("maj=15"));
    assert!(text.contains("des={1,4,6}"));

    let json = stdout_of(&["stats", "--word", "*", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["inv"], 0);
    assert_eq!(v["maj"], 0);

    let dg = stdout_of(&["stats", "--digraph", r#"{"n":1,"succ":{"1":1}}"#]);
    assert!(dg.contains("fp=1"));
    assert!(dg.contains("cyc=1"));
}

#[test]
fn parse_failures_exit_two() {
    let repeated = mahonian(&["stats", "--word", "1 1 *"]);
    assert_eq!(repeated.status.code(), Some(2));
    let unknown_flag = mahonian(&["stats", "--nope"]);
    assert_eq!(unknown_flag.status.code(), Some(2));
    let unknown_task = mahonian(&["verify", "nope"]);
    assert_eq!(unknown_task.status.code(), Some(2));
    let missing = mahonian(&["verify"]);
    assert_eq!(missing.status.code(), Some(2));
    let bad_bounds = mahonian(&["enumerate", "--n", "3", "--k", "5"]);
    assert_eq!(bad_bounds.status.code(), Some(2));
    let over_ceiling = mahonian(&["enumerate", "--n", "12", "--k", "0"]);
    assert_eq!(over_ceiling.status.code(), Some(2));
}

#[test]
fn poly_distribution_table_one_cell() {
    let out = stdout_of(&[
        "poly",
        "distribution",
        "--n",
        "3",
        "--k",
        "1",
        "--weight",
        "tilde-inv-filled",
        "--holes",
        "2",
    ]);
    // (β+q)(β+q+q²) expanded canonically
    assert_eq!(out.trim(), "b^2+2bq+q^2+bq^2+q^3");
}

#[test]
fn poly_mu_euler_json() {
    let out = stdout_of(&[
        "poly", "mu", "--preset", "euler", "--order", "2", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["N"], 2);
    assert_eq!(v["entries"][2][0], "2");
    assert_eq!(v["entries"][2][1], "4");
    assert_eq!(v["entries"][2][2], "1");
}

#[test]
fn verify_single_task_and_exit_zero() {
    let out = mahonian(&["verify", "table1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("table1"));
    assert!(text.contains("pass"));
}

#[test]
fn verify_csv_shape() {
    let out = stdout_of(&["verify", "thm2.1", "--n-max", "3", "--format", "csv"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "id,bounds,status");
    assert_eq!(lines[1], "thm2.1,n<=3,pass");
}

#[test]
fn output_is_byte_identical_across_jobs() {
    for args in [
        vec![
            "poly",
            "distribution",
            "--n",
            "5",
            "--k",
            "2",
            "--weight",
            "maj",
        ],
        vec!["poly", "ld", "--n", "4", "--k", "1"],
        vec!["verify", "thm2.1", "--n-max", "4", "--format", "json"],
        vec!["enumerate", "--n", "4", "--k", "2"],
    ] {
        let mut one = args.clone();
        one.extend(["--jobs", "1"]);
        let mut four = args.clone();
        four.extend(["--jobs", "4"]);
        let a = stdout_of(&one);
        let b = stdout_of(&four);
        let c = stdout_of(&one);
        assert_eq!(a, b, "jobs changed output of {args:?}");
        assert_eq!(a, c, "rerun changed output of {args:?}");
    }
}

#[test]
fn seed_flag_accepted_and_inert() {
    let with = stdout_of(&["enumerate", "--n", "3", "--k", "0", "--seed", "7"]);
    let without = stdout_of(&["enumerate", "--n", "3", "--k", "0"]);
    assert_eq!(with, without);
}
