use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bibrackets"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.push("--json");
    let o = run(&all);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn eval_prints_divisor_sums() {
    let o = run(&["eval", "[2]", "--prec", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "q + 3*q^2 + 4*q^3 + 7*q^4 + O(q^5)");
    let v = json(&["eval", "[2]", "--prec", "4", "--oracle"]);
    assert_eq!(v["results"][4], "7");
    assert_eq!(v["precision"], 4);
    assert_eq!(v["stable"], true);
}

#[test]
fn pmap_and_products() {
    assert_eq!(
        stdout(&run(&["pmap", "[1,1 | 1,1]"])).trim(),
        "[2,2] + 2 * [3,1]"
    );
    let v = json(&["product", "--mode", "stuffle", "[2]", "[3]", "--prec", "12"]);
    assert_eq!(v["results"]["verified"], true);
    assert_eq!(
        v["results"]["combination"],
        "[2,3] - 1/12 * [3] + [3,2] + [5]"
    );
}

#[test]
fn shuffle_bracket_with_check() {
    let v = json(&["bracket", "--mode", "sh", "3,1", "--prec", "12"]);
    assert_eq!(
        v["results"]["combination"],
        "-1/2 * [3] + [3,1] + 1/2 * [3 | 1]"
    );
    assert_eq!(v["results"]["verified"], true);
}

#[test]
fn modular_suite_passes() {
    let o = run(&["verify", "modular-suite", "--prec", "40"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(!text.contains("FAIL"), "{text}");
    assert!(text.lines().count() >= 12);
}

#[test]
fn eisenstein_and_rankin_cohen() {
    let v = json(&["eisenstein", "4", "--prec", "3"]);
    assert_eq!(v["results"]["series"][0], "1/1440");
    assert_eq!(v["results"]["series"][2], "3/2");
    let v = json(&["rankin-cohen", "4", "4", "2", "--prec", "10"]);
    assert_eq!(v["results"]["verified"], true);
    assert_eq!(v["results"]["gamma"], "400");
}

#[test]
fn dims_table() {
    let v = json(&["dims", "--family", "sh", "--max-weight", "6", "--strict"]);
    assert_eq!(
        v["results"]["dims"],
        serde_json::json!([1, 0, 1, 2, 3, 6, 10])
    );
    assert_eq!(v["stable"], true);
    let latex = stdout(&run(&["dims", "--max-weight", "4", "--latex"]));
    assert!(latex.contains("$k$ & 0 & 1 & 2 & 3 & 4"));
}

#[test]
fn ds_counts_csv() {
    let o = run(&["ds-counts", "--max-weight", "5", "--csv"]);
    assert_eq!(
        stdout(&o),
        "k,eds_k,fds_k,rds_k\n1,0,0,0\n2,0,0,0\n3,1,0,0\n4,3,1,1\n5,6,2,1\n"
    );
    let v = json(&["ds-counts", "--variant", "rds", "--max-weight", "7"]);
    assert_eq!(v["results"]["rds"][6], 5);
}

#[test]
fn relations_and_express() {
    let v = json(&["relations", "--weight", "4"]);
    assert_eq!(v["results"]["kernel"].as_array().unwrap().len(), 1);
    assert_eq!(v["results"]["audited"], true);
    let v = json(&["express", "[2 | 1]", "--weight", "3"]);
    assert_eq!(v["results"]["combination"], "1/2 * [2] - [2,1] + [3]");
    let v = json(&["express", "[2]", "--weight", "1"]);
    assert_eq!(v["results"], "independent");
}

#[test]
fn sequences() {
    let v = json(&["sequences", "--kind", "gen", "--max", "10"]);
    assert_eq!(v["results"][10], 256);
    let v = json(&["sequences", "--kind", "dprime", "--max", "10"]);
    assert_eq!(v["results"][10], 100);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["eval", "[2"][..],
        &["dims", "--max-weight", "5", "--prec", "8"],
        &["eisenstein", "3"],
        &["dims", "--family", "xx", "--max-weight", "3"],
        &["no-such-command"],
        &["eval", "[2]", "--json", "--csv"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}
