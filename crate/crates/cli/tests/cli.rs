use std::process::{Command, Output};

fn superfrob(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superfrob"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn char_table_json_has_h3_entries() {
    let o = superfrob(&["char-table", "--r", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["r"], 3);
    assert_eq!(v["columns"], serde_json::json!([[3], [2, 1], [1, 1, 1]]));
    assert_eq!(v["rows"][0]["lambda"], serde_json::json!([3]));
    assert_eq!(v["rows"][0]["values"], serde_json::json!(["q^2", "q", "1"]));
    assert_eq!(v["rows"][1]["values"], serde_json::json!(["-1", "q - q^-1", "2"]));
    assert_eq!(v["rows"][2]["values"], serde_json::json!(["q^-2", "-q^-1", "1"]));
}

#[test]
fn trivial_csv_table() {
    let o = superfrob(&["char-table", "--r", "1", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "lambda\\mu,1\n1,1\n");
}

#[test]
fn frobenius_suite_passes() {
    let o = superfrob(&["verify", "--suite", "frobenius", "--r", "2", "--m", "1", "--n", "1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["passed"], true);
    assert!(!v["checks"].as_array().unwrap().is_empty());
}

#[test]
fn expand_q_row_in_power_sums() {
    let o = superfrob(&["expand", "--func", "q-row", "--k", "2", "--t", "q^-2", "--basis", "p"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "(1/2 - 1/2*q^-4)*p[2] + (1/2 - q^-2 + 1/2*q^-4)*p[1,1]\n");
}

#[test]
fn trace_with_xy_substitution() {
    let o = superfrob(&["trace", "--r", "2", "--m", "1", "--n", "1", "--xy"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "q*x1^2 + (-q + q^-1)*x1*y1 - q^-1*y1^2\n");
}

#[test]
fn reruns_are_byte_identical() {
    let args = ["--jobs", "2", "char-table", "--r", "4", "--format", "json"];
    let a = superfrob(&args);
    let b = superfrob(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn output_file_matches_stdout() {
    let dir = std::env::temp_dir().join(format!("superfrob-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("table.csv");
    let o = superfrob(&["char-table", "--r", "3", "--format", "csv", "--output", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let direct = superfrob(&["char-table", "--r", "3", "--format", "csv"]);
    assert_eq!(std::fs::read(&path).unwrap(), direct.stdout);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(superfrob(&["char-table", "--bogus"]).status.code(), Some(2));
    assert_eq!(superfrob(&["verify", "--suite", "nope", "--r", "2"]).status.code(), Some(2));
    assert_eq!(superfrob(&["expand", "--func", "q-row", "--basis", "p"]).status.code(), Some(2));
    assert_eq!(superfrob(&["trace", "--r", "2", "--m", "1", "--n", "1", "--mu", "1"]).status.code(), Some(2));
}
