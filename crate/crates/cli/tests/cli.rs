use std::path::PathBuf;
use std::process::{Command, Output};

fn lrh(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lrh"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = lrh(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    lrh(args).status.code().unwrap()
}

fn scratch_dir(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("lrh-cli-{name}-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    dir
}

#[test]
fn series_examples() {
    let plain = stdout(&["series", "--family", "upq", "--p", "1", "--q", "1", "--max-degree", "4", "--format", "plain"]);
    assert_eq!(plain.trim(), "1 2 4 6 9");
    let json = stdout(&["series", "--family", "glnr", "--n", "1", "--max-degree", "3"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["coefficients"], serde_json::json!(["1", "1", "1", "1"]));
    assert_eq!(v["family"], "glnr");
    assert_eq!(v["equation"], "sum c(2l;m,m), len(l)<=n, len(m)<=n");
}

#[test]
fn json_schema_has_exactly_five_keys() {
    let json = stdout(&["series", "--family", "opq", "--p", "2", "--q", "1", "--max-degree", "3"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    let obj = v.as_object().unwrap();
    let mut keys: Vec<&str> = obj.keys().map(String::as_str).collect();
    keys.sort();
    assert_eq!(keys, ["coefficients", "equation", "family", "max_degree", "params"]);
    assert!(obj["family"].is_string());
    assert!(obj["params"].is_object());
    assert_eq!(obj["params"]["p"], 2);
    assert_eq!(obj["max_degree"], 3);
    assert!(obj["coefficients"].as_array().unwrap().iter().all(|c| c.is_string()));
    assert!(obj["equation"].is_string());
}

#[test]
fn formats_agree() {
    let base = ["series", "--family", "sppq", "--p", "2", "--q", "2", "--max-degree", "5"];
    let with = |f: &str| {
        let mut a = base.to_vec();
        a.extend(["--format", f]);
        stdout(&a)
    };
    let v: serde_json::Value = serde_json::from_str(&with("json")).unwrap();
    let from_json: Vec<String> = v["coefficients"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_str().unwrap().to_string())
        .collect();
    let plain: Vec<String> = with("plain").split_whitespace().map(String::from).collect();
    let csv: Vec<String> = with("csv")
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(1).unwrap().to_string())
        .collect();
    assert_eq!(from_json, plain);
    assert_eq!(from_json, csv);
}

#[test]
fn stable_classes() {
    let run = |c: &str, d: &str| stdout(&["stable", "--class", c, "--max-degree", d, "--format", "plain"]);
    assert_eq!(run("gl-c", "4").trim(), "1 2 6 14 34");
    assert_eq!(run("orthsymp", "3").trim(), "1 0 3 0");
    assert_eq!(run("gl-r", "3").trim(), "1 1 3 5");
    assert_eq!(code(&["stable", "--class", "sl", "--max-degree", "3"]), 2);
}

#[test]
fn closed_products() {
    let run = |args: &[&str]| {
        let mut a = vec!["closed"];
        a.extend(args);
        a.extend(["--format", "plain"]);
        stdout(&a)
    };
    assert_eq!(run(&["--name", "F", "--max-degree", "4"]).trim(), "1 2 6 14 34");
    assert_eq!(run(&["--name", "glq", "--q", "2", "--max-degree", "4"]).trim(), "1 1 3 6 14");
    assert_eq!(run(&["--name", "In", "--n", "2", "--max-degree", "4"]).trim(), "1 1 2 2 3");
    let stanley = run(&["--name", "stanley", "--max-degree", "2"]);
    assert_eq!(stanley.split_whitespace().nth(1), Some("1/2"));
    assert_eq!(code(&["closed", "--name", "glq", "--max-degree", "4"]), 2);
    assert_eq!(code(&["closed", "--name", "In", "--max-degree", "4"]), 2);
    assert_eq!(code(&["closed", "--name", "F", "--q", "2", "--max-degree", "4"]), 2);
}

#[test]
fn coefficients() {
    assert_eq!(stdout(&["lr", "--kind", "lr", "--lambda", "3,2,1", "--mu", "2,1", "--nu", "2,1"]).trim(), "2");
    assert_eq!(stdout(&["lr", "--kind", "kron", "--lambda", "2,1", "--mu", "2,1", "--nu", "2,1"]).trim(), "1");
    assert_eq!(stdout(&["lr", "--lambda", "2,1", "--mu", "none", "--nu", "2,1"]).trim(), "1");
    assert_eq!(code(&["lr", "--kind", "lr", "--lambda", "1,2", "--mu", "1", "--nu", "1"]), 2);
    assert_eq!(code(&["lr", "--kind", "kron", "--lambda", "2", "--mu", "1", "--nu", "1"]), 2);
}

#[test]
fn usage_errors() {
    assert_eq!(code(&["series", "--family", "upq", "--n", "3", "--max-degree", "2"]), 2);
    assert_eq!(code(&["series", "--family", "glnr", "--p", "1", "--n", "1", "--max-degree", "2"]), 2);
    assert_eq!(code(&["series", "--family", "glnr", "--n", "0", "--max-degree", "2"]), 2);
    assert_eq!(code(&["series", "--family", "su2", "--n", "1", "--max-degree", "2"]), 2);
    assert_eq!(code(&["series", "--family", "glnr", "--n", "1"]), 2);
    assert_eq!(code(&["verify", "--suite", "nothing"]), 2);
}

#[test]
fn verify_suites() {
    let out = lrh(&["verify", "--suite", "ctheorem", "--max-degree", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(code(&["verify", "--suite", "stability", "--max-degree", "2"]), 0);
    let stanley = stdout(&["verify", "--suite", "stanley", "--max-degree", "3"]);
    assert!(stanley.contains("1 1 3 5"));
    assert!(stanley.contains("1/2"));
    assert!(stanley.contains("[DIFFER]"));
    let skew = stdout(&["verify", "--suite", "skew"]);
    assert!(skew.contains("REPORT"));
}

#[test]
fn output_is_deterministic() {
    let args = ["series", "--family", "onc", "--n", "4", "--max-degree", "6"];
    let first = lrh(&args).stdout;
    let second = lrh(&args).stdout;
    assert_eq!(first, second);
    let single = Command::new(env!("CARGO_BIN_EXE_lrh"))
        .args(args)
        .env("LRH_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(single.stdout, first);
}

#[test]
fn bad_thread_count() {
    let out = Command::new(env!("CARGO_BIN_EXE_lrh"))
        .args(["stable", "--class", "gl-c", "--max-degree", "2"])
        .env("LRH_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn cache_dir_round_trip() {
    let dir = scratch_dir("cache");
    let d = dir.to_str().unwrap();
    let args = ["--cache-dir", d, "stable", "--class", "gl-c", "--max-degree", "4", "--format", "plain"];
    let first = stdout(&args);
    let lr: Vec<serde_json::Value> =
        serde_json::from_str(&std::fs::read_to_string(dir.join("lr.json")).unwrap()).unwrap();
    assert!(!lr.is_empty());
    assert!(dir.join("kronecker.json").exists());
    assert_eq!(stdout(&args), first);

    std::fs::write(dir.join("lr.json"), "not json").unwrap();
    assert_eq!(code(&args), 2);
    let _ = std::fs::remove_dir_all(&dir);
}
