use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hurwitz-hodge"))
        .args(args)
        .env_remove("HURWITZ_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn series_text() {
    assert_eq!(stdout(&["series", "--name", "D", "--d", "2", "--order", "4"]), "u^2/8 + u^4/192\n");
    assert_eq!(stdout(&["series", "--name", "CY", "--d", "1", "--order", "4"]), "1\n");
    assert_eq!(stdout(&["series", "--name", "T", "--d", "5", "--order", "0"]), "1/5\n");
}

#[test]
fn series_json_round_trips() {
    let text = stdout(&["series", "--name", "Hd", "--d", "3", "--order", "6", "--format", "json"]);
    let s = hurwitz_core::TruncatedSeries::from_json(text.trim()).unwrap();
    assert_eq!(s, hurwitz_core::hurwitz::one_part_series_closed(3, 6).unwrap());
}

#[test]
fn hurwitz_table() {
    let text = stdout(&["hurwitz", "--d", "3", "--eta", "3", "--g", "0..1", "--format", "csv"]);
    assert_eq!(text, "d,eta,g,r,value,source\n3,3,0,2,1,cutjoin\n3,3,1,4,9,cutjoin\n");
}

#[test]
fn hurwitz_json_rows_parse() {
    let text = stdout(&["hurwitz", "--d", "3", "--eta", "2,1", "--g", "0", "--source", "oracle", "--format", "json"]);
    let rows: Vec<serde_json::Value> = serde_json::from_str(&text).unwrap();
    let v = hurwitz_core::HurwitzValue::from_json(&rows[0].to_string()).unwrap();
    assert_eq!(v.value, hurwitz_core::rational::int(4));
}

#[test]
fn both_sources_agree() {
    let text = stdout(&["hurwitz", "--d", "4", "--g", "0..1", "--source", "both", "--format", "csv"]);
    for line in text.lines().skip(1) {
        assert!(line.ends_with(",0"), "{line}");
    }
}

#[test]
fn hodge_values() {
    let text = stdout(&["hodge", "--d", "2", "--i", "1", "--g", "1..2", "--format", "csv"]);
    assert_eq!(text, "d,i,g,value\n2,1,1,1/4\n2,1,2,1/8\n");
}

#[test]
fn verify_all_passes() {
    let out = run(&["verify", "--all", "--d", "1..4", "--order", "10"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(!text.contains("FAIL"));
    assert!(String::from_utf8_lossy(&out.stderr).contains("skipped at d = 1"));
}

#[test]
fn verify_json_reports() {
    let text = stdout(&["verify", "--identity", "heta", "--d", "3", "--order", "8", "--format", "json"]);
    let reports: Vec<hurwitz_core::IdentityReport> = serde_json::from_str(&text).unwrap();
    assert_eq!(reports.len(), 1);
    assert!(reports[0].passed);
    assert_eq!(reports[0].certified_order, 5);
}

#[test]
fn usage_and_capacity_errors_exit_2() {
    assert_eq!(run(&["series", "--name", "X", "--d", "2"]).status.code(), Some(2));
    assert_eq!(run(&["hurwitz", "--d", "8", "--g", "5", "--source", "oracle"]).status.code(), Some(2));
    assert_eq!(run(&["hurwitz", "--d", "3", "--eta", "2,2"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--d", "2"]).status.code(), Some(2));
    assert_eq!(run(&["hodge", "--d", "2", "--i", "2", "--g", "1"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn budget_flag_beats_environment() {
    let args = ["hurwitz", "--d", "3", "--eta", "3", "--g", "1", "--source", "oracle"];
    let out = Command::new(env!("CARGO_BIN_EXE_hurwitz-hodge"))
        .args(args)
        .env("HURWITZ_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_hurwitz-hodge"))
        .args(args)
        .args(["--budget", "1000"])
        .env("HURWITZ_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn output_is_deterministic() {
    let args = ["hurwitz", "--d", "4", "--g", "0..2", "--format", "json"];
    assert_eq!(stdout(&args), stdout(&args));
}
