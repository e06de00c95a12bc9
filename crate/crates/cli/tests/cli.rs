use std::process::{Command, Output};

const GOLDEN_TRIPLE: &str = r#"{"mu":[5,3,1,0],"nu":[7,5,3,2],"lambda":[11,7,5,3]}"#;

fn lrhive(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lrhive"))
        .args(args)
        .output()
        .expect("run lrhive")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn count_agrees_with_oracle() {
    for model in ["lr", "hive", "gz1", "gz2"] {
        let out = lrhive(&["count", "--model", model, "--triple", GOLDEN_TRIPLE]);
        assert_eq!(out.status.code(), Some(0));
        assert_eq!(stdout(&out).trim(), "5", "model {model}");
    }
    let out = lrhive(&[
        "oracle",
        "--mu",
        "[5,3,1,0]",
        "--nu",
        "[7,5,3,2]",
        "--lambda",
        "[11,7,5,3]",
    ]);
    assert_eq!(stdout(&out).trim(), "5");
}

#[test]
fn uncontained_inner_shape_counts_zero() {
    let out = lrhive(&[
        "count",
        "--model",
        "lr",
        "--triple",
        r#"{"mu":[3,0],"nu":[1,0],"lambda":[2,2]}"#,
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "0");
}

#[test]
fn exit_codes() {
    assert_eq!(
        lrhive(&["count", "--model", "bogus", "--triple", GOLDEN_TRIPLE])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        lrhive(&["count", "--model", "lr", "--triple", "not json"])
            .status
            .code(),
        Some(1)
    );
    let domain = lrhive(&[
        "oracle", "--mu", "[2,1]", "--nu", "[3,0,1]", "--lambda", "[1]",
    ]);
    assert_eq!(domain.status.code(), Some(2));
    assert!(!domain.stderr.is_empty());
}

#[test]
fn enumerate_and_render() {
    let out = lrhive(&[
        "enumerate",
        "--model",
        "hive",
        "--triple",
        GOLDEN_TRIPLE,
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let lines: Vec<String> = stdout(&out).lines().map(str::to_owned).collect();
    assert_eq!(lines.len(), 5);
    let drawn = lrhive(&["render", "--in", &lines[0]]);
    assert_eq!(drawn.status.code(), Some(0));
    let text = stdout(&drawn);
    assert_eq!(text.lines().count(), 5);
    assert!(text.lines().next().unwrap().trim() == "0");
}

#[test]
fn map_golden_tableau_to_hive() {
    let tableau = r#"{"shape":{"n":4,"outer":[11,7,5,3],"inner":[5,3,1,0]},"matrix":[[6,1,0,0],[0,3,1,1],[0,0,3,0],[0,0,0,2]]}"#;
    let out = lrhive(&["map", "--from", "lr", "--to", "hive", "--in", tableau]);
    assert_eq!(out.status.code(), Some(0));
    let hive: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(hive["rows"][2], serde_json::json!([8, 15, 18]));
    assert_eq!(hive["rows"][3], serde_json::json!([9, 16, 20, 23]));
}

#[test]
fn verify_trivial_and_deterministic() {
    let out = lrhive(&["verify", "--n", "1", "--max-part", "0"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("result: pass"));

    let args = [
        "verify",
        "--n",
        "3",
        "--max-part",
        "2",
        "--mode",
        "sampled:50",
        "--seed",
        "7",
        "--format",
        "json",
    ];
    let first = lrhive(&args);
    let single = Command::new(env!("CARGO_BIN_EXE_lrhive"))
        .args(args)
        .env("LRHIVE_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, single.stdout);
    let report: serde_json::Value = serde_json::from_slice(&first.stdout).unwrap();
    assert_eq!(report["triples_checked"], 50);
    assert_eq!(report["failure_count"], 0);
}

#[test]
fn bad_thread_setting_is_a_usage_error() {
    let out = Command::new(env!("CARGO_BIN_EXE_lrhive"))
        .args(["count", "--model", "lr", "--triple", GOLDEN_TRIPLE])
        .env("LRHIVE_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}
