use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_apery"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8")
}

#[test]
fn table_csv_first_rows() {
    let out = run(&["table", "--n-max", "2", "--digits", "12", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "n,u_num,v_num,v_den,D_n,F_decimal,F_error_bound,lemma4_bound"
    );
    assert!(lines
        .next()
        .unwrap()
        .starts_with("0,2,0,1,1,2.404113806319,"));
    assert!(lines
        .next()
        .unwrap()
        .starts_with("1,10,12,1,1,0.020569031595,"));
    assert!(lines.next().unwrap().starts_with("2,146,351,2,2,"));
}

#[test]
fn verify_small_passes() {
    let out = run(&["verify", "--n-max", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for anchor in ["Lemma1", "Eq6", "Eq7", "Eq10", "Eq14", "Lemma4", "Lemma7"] {
        assert!(text.contains(&format!("[{anchor}]")), "missing {anchor}");
    }
    assert!(!text.contains("FAIL"));
}

#[test]
fn json_is_deterministic_and_parses() {
    let args = ["verify", "--n-max", "4", "--format", "json"];
    let (a, b) = (run(&args), run(&args));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["command"], "verify");
    assert!(v["checks"].as_array().unwrap().len() > 20);
}

#[test]
fn gate_header_and_summary() {
    let out = run(&["gate", "--n-max", "12"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("27*(17-12*sqrt(2)) = 0.7948"));
    assert!(text.contains("first_n_value_below_one"));
    assert!(text.contains("bound_decreasing_from"));
}

#[test]
fn eval_and_fit_succeed() {
    let out = run(&["eval", "--n-max", "3", "--digits", "20"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("ball"));
    assert_eq!(run(&["fit", "--n-max", "3"]).status.code(), Some(0));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["gate", "--n-max", "1"]).status.code(), Some(2));
    assert_eq!(run(&["gate", "--q", "0"]).status.code(), Some(2));
    assert_eq!(run(&["table", "--format", "xml"]).status.code(), Some(2));
    assert_eq!(run(&[]).status.code(), Some(2));
}

#[test]
fn out_file_written() {
    let dir = std::env::temp_dir().join(format!("apery-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("table.json");
    let out = run(&[
        "table",
        "--n-max",
        "1",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["rows"][1]["u_num"], "10");
    std::fs::remove_dir_all(&dir).unwrap();
}
