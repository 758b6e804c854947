use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn lab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coverideal-lab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("JSON report")
}

#[test]
fn odd_cycle_tsv_has_two_rows() {
    let out = lab(&["odd-cycle", "--n", "5", "--smax", "2", "--format", "tsv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<_> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[0].starts_with("experiment\tcase\tclaim\tpass"));
    assert!(lines[1..]
        .iter()
        .all(|l| l.split('\t').nth(3) == Some("true")));
}

#[test]
fn deg_formula_rows() {
    let out = lab(&["deg-formula", "--max", "13"]);
    assert!(out.status.success());
    assert_eq!(json(&out)["rows"].as_array().unwrap().len(), 6);
}

#[test]
fn wp_search_on_graph_file() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    write!(file, r#"{{"n":5,"edges":[[1,2],[2,3],[3,4],[4,5],[1,5]]}}"#).unwrap();
    let out = lab(&["wp", "search", "--graph", file.path().to_str().unwrap()]);
    assert!(out.status.success());
    let row = &json(&out)["rows"][0]["values"];
    assert!(row["order"].is_array());
    assert!(row["certificate"]["order"].is_array());
}

#[test]
fn wp_check_reports_violation_with_failing_exit() {
    let out = lab(&["wp", "check", "--graph", "star4", "--order", "1,2,3,4"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(
        json(&out)["rows"][0]["values"]["outcome"]["outcome"],
        "violation"
    );
}

#[test]
fn exhausted_search_fails() {
    let out = lab(&["wp", "search", "--graph", "star4"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn text_ideal_file_and_regularity() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "x1*x2\nx2*x3\nx1*x3").unwrap();
    let out = lab(&[
        "reg",
        "--file",
        file.path().to_str().unwrap(),
        "--ambient",
        "3",
    ]);
    assert!(out.status.success());
    assert_eq!(json(&out)["rows"][0]["values"]["reg"], 2);
    let out = lab(&[
        "betti",
        "--file",
        file.path().to_str().unwrap(),
        "--ambient",
        "3",
    ]);
    let table = json(&out)["rows"][0]["values"]["table"]
        .as_str()
        .unwrap()
        .to_string();
    assert!(table.contains("total: 3 2"));
}

#[test]
fn reports_are_deterministic_given_seed() {
    let a = lab(&[
        "truncation-reg",
        "--count",
        "5",
        "--seed",
        "3",
        "--format",
        "tsv",
    ]);
    let b = lab(&[
        "truncation-reg",
        "--count",
        "5",
        "--seed",
        "3",
        "--format",
        "tsv",
    ]);
    let strip = |o: &Output| {
        String::from_utf8(o.stdout.clone())
            .unwrap()
            .lines()
            .map(|l| {
                let mut f: Vec<_> = l.split('\t').collect();
                f.remove(4);
                f.join("\t")
            })
            .collect::<Vec<_>>()
    };
    assert_eq!(strip(&a), strip(&b));
}

#[test]
fn bad_input_exits_with_usage_or_error() {
    assert_eq!(
        lab(&["odd-cycle", "--n", "4", "--smax", "1"]).status.code(),
        Some(2)
    );
    assert_eq!(lab(&["odd-cycle", "--bogus"]).status.code(), Some(2));
    assert_eq!(
        lab(&["graph", "--graph", "nonsense"]).status.code(),
        Some(2)
    );
}

#[test]
fn single_computations() {
    let out = lab(&["graph", "--graph", "c5"]);
    assert_eq!(
        json(&out)["rows"][0]["values"]["minimal_vertex_covers"]
            .as_array()
            .unwrap()
            .len(),
        5
    );
    let out = lab(&["symbolic", "--graph", "c5", "--s", "2"]);
    assert!(out.status.success());
    assert_eq!(json(&out)["rows"][0]["values"]["equal"], true);
    let out = lab(&["lideal", "--graph", "c5", "--s", "2", "--t", "1"]);
    assert_eq!(
        json(&out)["rows"][0]["values"]["equals_whisker_symbolic_power"],
        true
    );
    let out = lab(&["vdec", "--graph", "c5"]);
    assert!(out.status.success());
    let out = lab(&["vdec", "--graph", "c7"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(lab(&["herzog", "--graph", "c5", "--s", "3"])
        .status
        .success());
    assert!(lab(&["example-5-1"]).status.success());
    assert!(lab(&["truncation-check", "--n", "3", "--smax", "2"])
        .status
        .success());
}
