use std::process::{Command, Output};

use serde_json::Value;

fn brauerlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_brauerlab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn enumerate_prints_fifteen_diagrams() {
    let o = brauerlab(&["enumerate", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 15);
    let o = brauerlab(&["enumerate", "--n", "2", "--labels", "rows"]);
    assert_eq!(stdout(&o), "(1 1')(2 2')\n(1 2)(1' 2')\n(1 2')(2 1')\n");
}

#[test]
fn kernel_theorem_smallest_case() {
    let o = brauerlab(&["--format", "json", "kernel", "--n", "2", "--m", "1", "--check-theorem"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["dimension"], 1);
    assert_eq!(v["report"]["pass"], true);
    assert_eq!(v["basis"][0].as_array().unwrap().len(), 3);
}

#[test]
fn kernel_csv_has_one_row_per_vector() {
    let o = brauerlab(&["kernel", "--n", "3", "--m", "1", "--csv"]);
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 11);
    assert_eq!(text.lines().next().unwrap().split(',').count(), 16);
}

#[test]
fn verify_all_reports_only_the_witness_failure() {
    let o = brauerlab(&["--format", "json", "verify", "--suite", "all", "--max-n", "3", "--max-m", "2"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let failing: Vec<(String, String)> = v["reports"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| r["pass"] == false)
        .map(|r| (r["check"].as_str().unwrap().to_string(), r["detail"]["lambda"].as_str().unwrap_or("").to_string()))
        .collect();
    // the paired-columns coefficient is 2 for (4,2); everything else holds
    assert_eq!(failing, vec![("lemma27".to_string(), "4,2".to_string())]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn verify_output_is_byte_identical() {
    let a = brauerlab(&["--format", "json", "verify", "--suite", "kernel", "--max-n", "3"]);
    let b = brauerlab(&["--format", "json", "verify", "--suite", "kernel", "--max-n", "3"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn errors_exit_two_with_json_under_json() {
    let o = brauerlab(&["--format", "json", "star", "--n", "2", "--diagram", "(1 2)(3 3)", "--perm", "(1 2)"]);
    assert_eq!(o.status.code(), Some(2));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["error"].is_string());
    let o = brauerlab(&["kernel", "--n", "0", "--m", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(String::from_utf8(o.stderr).unwrap().lines().count(), 1);
    let o = brauerlab(&["verify", "--suite", "everything"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn out_file_receives_output() {
    let dir = std::env::temp_dir().join(format!("brauerlab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("product.json");
    let o = brauerlab(&["--format", "json", "--out", path.to_str().unwrap(), "mult", "--n", "3", "--lhs", "e1", "--rhs", "e2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["loops"], 0);
    std::fs::remove_dir_all(&dir).ok();
}
