use std::process::{Command, Output};

use ree_core::report::Status;
use ree_core::suite::MReport;
use serde::Deserialize;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ree-verify")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[derive(Deserialize)]
struct VerifyOut {
    status: Status,
    results: Vec<MReport>,
}

#[test]
fn verify_json_round_trips() {
    let o = run(&["verify", "-m", "1,3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: VerifyOut = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.status, Status::Pass);
    assert_eq!(v.results.iter().map(|r| r.m).collect::<Vec<_>>(), vec![1, 3]);
    let ids: Vec<&str> = v.results[0].checks.iter().map(|c| c.id.as_str()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
    assert_eq!(ids.len(), 7);
}

#[test]
fn step3_reports_sz8() {
    let o = run(&["verify", "-m", "1", "--checks", "step3"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("PASS step3.sz8-diophantine"), "{out}");
    assert!(out.contains("all checks passed"));
}

#[test]
fn step2_names_the_survivor() {
    let o = run(&["verify", "-m", "1", "--checks", "step2", "--n-max", "50", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: VerifyOut = serde_json::from_str(&stdout(&o)).unwrap();
    let lie = v.results[0].checks[0].find("step2.lie-type").unwrap();
    assert!(lie.witness["survivor"].starts_with("2F4, n=1"), "{:?}", lie.witness);
}

#[test]
fn degrees_json() {
    let o = run(&["degrees", "-m", "1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 43);
    assert_eq!(v["sum_of_squares_matches_order"], true);
    assert_eq!(v["set_size"], "40");
    assert!(rows.iter().any(|r| r["degree"] == "68719476736"));
}

#[test]
fn dump_tables_is_json() {
    let o = run(&["dump-tables"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["character_degrees"].as_array().unwrap().len(), 43);
    assert_eq!(v["sz8"]["order"], "29120");
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["verify", "-m", "0"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--checks", "bogus"]).status.code(), Some(2));
    assert_eq!(run(&["degrees", "-m", "1..2"]).status.code(), Some(2));
    assert_eq!(run(&["nonsense"]).status.code(), Some(2));
    let o = Command::new(env!("CARGO_BIN_EXE_ree-verify"))
        .args(["verify", "-m", "1", "--checks", "step5"])
        .env("REE_VERIFY_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn thread_cap_does_not_change_output() {
    let args = ["verify", "-m", "1..3", "--checks", "lemma8,step1", "--format", "json"];
    let one =
        Command::new(env!("CARGO_BIN_EXE_ree-verify")).args(args).env("REE_VERIFY_THREADS", "1").output().unwrap();
    let many = run(&args);
    assert_eq!(one.stdout, many.stdout);
}
