use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_cylindric"))
        .args(args)
        .env_remove("CYLINDRIC_ORDER")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary starts");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn series_f11() {
    let o = run(&["series", "--name", "f11", "--order", "4"], "");
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "[1,2,3,6,10]");
}

#[test]
fn series_order_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_cylindric"))
        .args(["series", "--name", "d11"])
        .env("CYLINDRIC_ORDER", "5")
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(o.stdout).unwrap().trim(), "[1,2,2,4,4,6]");
}

#[test]
fn series_json_and_bivariate() {
    let o = run(&["--format", "json", "series", "--name", "borodin", "--profile", "2,0", "--order", "2"], "");
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["coefficients"], serde_json::json!(["1", "1", "3"]));
    let o = run(&["series", "--name", "f11z", "--order", "1"], "");
    assert_eq!(stdout(&o).trim(), "[[1],[0,2]]");
}

#[test]
fn map_worked_example() {
    let o = run(&["map", "--profile", "1,1"], "[[7,4,4,3],[6,5,4]]\n");
    assert!(o.status.success());
    assert_eq!(
        stdout(&o).trim(),
        r#"{"mu":[5,5,4,3,3,3,2],"beta":[7,1],"flavor":"distinct-odd"}"#
    );
}

#[test]
fn map_trace_and_unmap() {
    let o = run(&["map", "--trace"], r#"{"profile":[1,1],"rows":[[7,4,4,3],[6,5,4]]}"#);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    let js: Vec<u64> = v["trace"].as_array().unwrap().iter().map(|s| s["j"].as_u64().unwrap()).collect();
    assert_eq!(js, vec![4, 1]);

    let o = run(&["unmap"], r#"{"mu":[6,5,5,3,1],"beta":[9,7,3],"flavor":"distinct-odd"}"#);
    assert_eq!(
        stdout(&o).trim(),
        r#"{"profile":[1,1],"rows":[[8,8,2,2,1],[9,5,3,1]]}"#
    );
}

#[test]
fn map_then_unmap_is_identity_on_a_corpus() {
    for profile in ["1,1", "2,0"] {
        let mut corpus = String::new();
        for w in 0..=9 {
            let o = run(&["--format", "json", "enumerate", "--profile", profile, "--weight", &w.to_string()], "");
            assert!(o.status.success());
            corpus.push_str(&stdout(&o));
        }
        let mapped = run(&["map", "--profile", profile], &corpus);
        assert!(mapped.status.success());
        let back = run(&["unmap"], &stdout(&mapped));
        assert!(back.status.success());
        assert_eq!(stdout(&back), corpus, "profile {profile}");
    }
}

#[test]
fn odd_flavor_exit_codes() {
    let o = run(&["map", "--flavor", "odd"], "[[3],[]]\n");
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), r#"{"mu":[1],"beta":[1],"flavor":"doubled-odd"}"#);
    let o = run(&["map", "--flavor", "odd"], "[[1],[]]\n");
    assert_eq!(o.status.code(), Some(3));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.starts_with("error[not-in-image]"), "{err}");
}

#[test]
fn unmap_strict_rule() {
    let pair = r#"{"mu":[1],"beta":[],"flavor":"doubled-odd"}"#;
    assert!(run(&["unmap"], pair).status.success());
    assert_eq!(run(&["unmap", "--strict"], pair).status.code(), Some(2));
}

#[test]
fn invalid_input_exit_code() {
    assert_eq!(run(&["map"], "[[1,2],[]]\n").status.code(), Some(2));
    assert_eq!(run(&["map"], "not json\n").status.code(), Some(2));
    assert_eq!(run(&["unmap"], r#"{"mu":[],"beta":[3,3],"flavor":"distinct-odd"}"#).status.code(), Some(2));
    assert_eq!(run(&["map", "--profile", "1,2,0"], "").status.code(), Some(2));
    assert_eq!(run(&["enumerate", "--profile", "x", "--weight", "1"], "").status.code(), Some(2));
    let o = run(&["--format", "json", "verify", "--check", "bogus"], "");
    assert_eq!(o.status.code(), Some(2));
    let v: serde_json::Value = serde_json::from_str(String::from_utf8(o.stderr).unwrap().trim()).unwrap();
    assert_eq!(v["error"], "invalid-input");
}

#[test]
fn enumerate_and_count() {
    let o = run(&["enumerate", "--profile", "1,1", "--weight", "3", "--filter", "distinct"], "");
    assert_eq!(stdout(&o).lines().count(), 4);
    let o = run(&["count", "--profile", "1,1", "--max-weight", "4"], "");
    assert_eq!(stdout(&o).trim(), "[1,2,3,6,10]");
    let o = run(&["--format", "json", "count", "--max-weight", "2", "--refined"], "");
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["entries"][0], serde_json::json!([0, 0, 1]));
}

#[test]
fn json_output_is_stable() {
    let args = ["--format", "json", "enumerate", "--profile", "1,2,0", "--weight", "6"];
    assert_eq!(stdout(&run(&args, "")), stdout(&run(&args, "")));
}

#[test]
fn verify_small_order() {
    let o = run(&["verify", "--check", "all", "--order", "10"], "");
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).contains("checks passed"));
    let o = run(&["--format", "json", "verify", "--check", "thm33", "--order", "30"], "");
    for line in stdout(&o).lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["pass"], true);
        assert_eq!(v["order"], 30);
    }
}

#[test]
fn oc_table() {
    let o = run(&["--format", "json", "oc-table", "--max-weight", "3"], "");
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["rows"].as_array().unwrap().len(), 4);
    assert_eq!(v["first_diff"], 1);
}
