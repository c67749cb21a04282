use std::process::{Command, Output};

const UNIT_SIGNAL: &str = r#"{"breakpoints":["0","1"],"values":["1"]}"#;

fn fliess(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fliess"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8")
}

fn json(args: &[&str]) -> (i32, serde_json::Value) {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let out = fliess(&all);
    let doc = serde_json::from_slice(&out.stdout).expect("JSON output");
    (out.status.code().expect("exit code"), doc)
}

#[test]
fn invert_both_methods_match() {
    let out = fliess(&["--trunc", "3", "invert", "--method", "both", "(1+x1, 0)"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.matches("(1 - x1 + 3*x1x1 - 15*x1x1x1, 0)").count(), 2);
    assert!(text.trim_end().ends_with("MATCH"));
}

#[test]
fn antipode_of_a_x0() {
    let out = fliess(&["antipode", "--coord", "a:x0"]);
    assert_eq!(stdout(&out).trim(), "-a[x0] + b[x0]*a[e] - b[x1]*a[e]^2 + a[e]*a[x1]");
}

#[test]
fn hilbert_table() {
    let (code, doc) = json(&["hilbert", "--max-degree", "9"]);
    assert_eq!(code, 0);
    let dims: Vec<u64> = doc["result"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["dim_h"].as_u64().unwrap())
        .collect();
    assert_eq!(dims, [1, 2, 6, 15, 38, 89, 210, 474, 1065, 2339]);
}

#[test]
fn parse_examples() {
    let (code, doc) = json(&["shuffle", "1 - x1 + 3*x1x1", "e"]);
    assert_eq!(code, 0);
    let terms = doc["result"]["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 3);
    assert_eq!(terms[2]["word"], "x1x1");
    assert_eq!(terms[2]["coeff"], "3/1");
    let (_, doc) = json(&["shuffle", "2/3*x0x1", "1"]);
    assert_eq!(doc["result"]["terms"][0]["coeff"], "2/3");
}

#[test]
fn json_arguments_round_trip() {
    let (_, doc) = json(&["--trunc", "4", "shuffle", "x1 - 1/2*x0", "x1"]);
    let series = doc["result"].to_string();
    let (code, again) = json(&["--trunc", "4", "shuffle", &series, "1"]);
    assert_eq!(code, 0);
    assert_eq!(again["result"], doc["result"]);
    let (code, doc) = json(&["--trunc", "3", "shuffle", &series, "1"]);
    assert_eq!(code, 3);
    assert_eq!(doc["error"], "truncation-mismatch");
}

#[test]
fn exit_codes() {
    assert_eq!(fliess(&["shuffle", "x2", "x1"]).status.code(), Some(2));
    assert_eq!(fliess(&["shuffle", "x1x1", "x1", "--trunc", "1"]).status.code(), Some(2));
    assert_eq!(fliess(&["invert", "(x1, 0)"]).status.code(), Some(3));
    assert_eq!(fliess(&["invert", "--method", "antipode", "(2, x1)"]).status.code(), Some(3));
    assert_eq!(fliess(&["linearize", "x0x0"]).status.code(), Some(3));
    let (code, doc) = json(&["shuffle-inv", "x1"]);
    assert_eq!(code, 3);
    assert_eq!(doc["ok"], false);
    assert_eq!(doc["error"], "no-shuffle-inverse");
}

#[test]
fn tolerance_failure_exits_four() {
    let args = ["oracle-check", "x1", "(1, x0)", "--signal", UNIT_SIGNAL, "--at", "1/8", "--refinement", "64"];
    let mut strict = args.to_vec();
    strict.extend(["--tolerance", "1/1000000"]);
    assert_eq!(fliess(&strict).status.code(), Some(4));
    let mut loose = args.to_vec();
    loose.extend(["--tolerance", "1/1000"]);
    assert_eq!(fliess(&loose).status.code(), Some(0));
}

#[test]
fn oracle_rows() {
    let (code, doc) = json(&["oracle-check", "x1", "(1, x0)", "--signal", UNIT_SIGNAL, "--at", "1/8"]);
    assert_eq!(code, 0);
    let rows = doc["result"]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 4);
    // t²/(2n) at n = 256
    assert_eq!(rows[2]["residual"]["exact"], "1/32768");
    assert_eq!(rows[3]["ratio"], 2.0);
}

#[test]
fn simulate_examples() {
    let (_, doc) = json(&["simulate", "--word", "x1", "--signal", r#"{"breakpoints":["0","1"],"values":["2"]}"#]);
    assert_eq!(doc["result"]["value"]["exact"], "2");
    let (_, doc) = json(&["simulate", "--series", "x0 + x1", "--signal", UNIT_SIGNAL, "--at", "3/4"]);
    assert_eq!(doc["result"]["value"]["exact"], "3/2");
    let (_, doc) = json(&["simulate", "--pair", "(1, 0)", "--signal", r#"{"breakpoints":["0","1/2","1"],"values":["1","-1/2"]}"#, "--at", "1/2"]);
    assert_eq!(doc["result"]["value"]["exact"], "-1/2");
    let out = fliess(&["simulate", "--word", "x1", "--signal", UNIT_SIGNAL, "--at", "2"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn group_verbs() {
    let out = fliess(&["--trunc", "4", "group-compose", "(1, x1)", "(1, x1)"]);
    assert_eq!(stdout(&out).trim(), "(1, 2*x1 + x0x1)");
    let out = fliess(&["--trunc", "4", "mixed-compose", "x1", "(1 + x1, 0)"]);
    assert_eq!(stdout(&out).trim(), "x1 + x1x1");
    let out = fliess(&["--trunc", "5", "feedback", "x1", "1"]);
    assert_eq!(stdout(&out).trim(), "x0 + x1");
    let out = fliess(&["--trunc", "4", "compose", "x1x1", "x1"]);
    assert_eq!(stdout(&out).trim(), "2*x0x0x1x1 + x0x1x0x1");
}

#[test]
fn hopf_verbs() {
    let out = fliess(&["coproduct", "--which", "tilde", "--coord", "a:x0"]);
    assert_eq!(stdout(&out).trim(), "a[x0] ⊗ 1 + a[x1] ⊗ a[e]");
    let (_, doc) = json(&["coproduct", "--which", "full", "--coord", "b[x1]"]);
    assert_eq!(doc["result"]["which"], "full");
    assert_eq!(fliess(&["antipode", "--coord", "c:x0"]).status.code(), Some(2));
}

#[test]
fn prelie_verbs() {
    let out = fliess(&["--trunc", "3", "bracket", "(x1, 0)", "(0, x1)"]);
    assert_eq!(stdout(&out).trim(), "(-x0x1, -x1x1)");
    let (code, doc) = json(&["--trunc", "4", "prelie-check", "(x1, 0)", "(0, x1)", "(x0, 0)"]);
    assert_eq!(code, 0);
    assert_eq!(doc["result"]["holds"], true);
}

#[test]
fn reldeg_and_linearize() {
    let (_, doc) = json(&["reldeg", "x0x1 + x0x0"]);
    assert_eq!(doc["result"]["status"], "defined");
    assert_eq!(doc["result"]["r"], 2);
    let (code, doc) = json(&["reldeg", "x0x0"]);
    assert_eq!(code, 0);
    assert_eq!(doc["result"]["status"], "no-forced-part");
    assert_eq!(doc["diagnostics"].as_array().unwrap().len(), 1);
    let out = fliess(&["linearize", "x1 + x1x1"]);
    let text = stdout(&out);
    assert!(text.contains("linearizing element: (1 + x1, 0)"));
    assert!(text.contains("normal form: x1"));
}

#[test]
fn check_single_criterion_is_deterministic() {
    let a = fliess(&["check", "--criterion", "7"]);
    let b = fliess(&["check", "--criterion", "7"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).starts_with("PASS criterion 7"));
    assert_eq!(fliess(&["check", "--criterion", "9"]).status.code(), Some(2));
}

#[test]
fn file_arguments() {
    let dir = std::env::temp_dir().join(format!("fliess-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("u.json");
    std::fs::write(&path, UNIT_SIGNAL).unwrap();
    let arg = format!("@{}", path.display());
    let out = fliess(&["simulate", "--series", "x1x1", "--signal", &arg, "--at", "1/2"]);
    assert_eq!(stdout(&out).trim(), "F(1/2) = 1/8 ≈ 1.250000000000e-1");
    assert_eq!(fliess(&["simulate", "--series", "x1", "--signal", "@/nonexistent/u.json"]).status.code(), Some(2));
    std::fs::remove_dir_all(&dir).ok();
}
