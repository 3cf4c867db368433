use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gaudinlab")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

#[test]
fn gaudin_json_trivial() {
    let out = run(&["gaudin", "--n", "1", "--r", "1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["n"], 1);
    assert_eq!(v["r"], 1);
    assert_eq!(v["poly"], "1");
    assert_eq!(v["schema"], "gaudinlab.poly/1");
}

#[test]
fn gaudin_latex() {
    let out = run(&["gaudin", "--n", "2", "--r", "2", "--format", "latex"]);
    assert_eq!(out.status.code(), Some(0));
    let s = String::from_utf8(out.stdout).unwrap();
    assert!(s.contains("x_{1}") && s.contains("t^{"));
}

#[test]
fn bound_and_usage_errors_exit_2() {
    let out = run(&["gaudin", "--n", "9", "--r", "9"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("bound"));
    assert_eq!(run(&["gaudin", "--n", "x"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--suite", "hecke", "--n", "7"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn bound_override_lifts_limit() {
    let out = run(&["gaudin", "--n", "1", "--r", "4", "--bound-override", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(run(&["gaudin", "--n", "1", "--r", "4"]).status.code(), Some(2));
}

#[test]
fn verify_exit_codes() {
    assert_eq!(run(&["verify", "--suite", "theorem1", "--n", "2", "--r", "1"]).status.code(), Some(0));
    assert_eq!(run(&["verify", "--suite", "theta", "--n", "2"]).status.code(), Some(1));
}

#[test]
fn theorem2_includes_worked_point() {
    let out = run(&["verify", "--suite", "theorem2", "--n", "2", "--r", "2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["suite"], "theorem2");
    let labels: Vec<String> = v["checks"].as_array().unwrap().iter().map(|c| c["label"].as_str().unwrap().to_string()).collect();
    assert!(labels.iter().any(|l| l == "worked point x1=y1,x2=t^2*y2"));
}

#[test]
fn warnaar_one_variable_normalization() {
    let out = run(&["verify", "--suite", "warnaar", "--n", "1", "--trunc", "1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["normalization"], "(1-t)");
}

#[test]
fn json_reports_are_reproducible() {
    for args in [
        ["verify", "--suite", "hecke", "--seed", "11", "--format", "json"],
        ["verify", "--suite", "factorise", "--seed", "5", "--format", "json"],
    ] {
        let mut a = json(&run(&args));
        let mut b = json(&run(&args));
        for v in [&mut a, &mut b] {
            assert!(v.as_object_mut().unwrap().remove("elapsed_ms").is_some());
        }
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    }
}

#[test]
fn thread_cap_is_honoured() {
    let out = Command::new(env!("CARGO_BIN_EXE_gaudinlab"))
        .args(["verify", "--suite", "theorem1", "--n", "3", "--r", "1"])
        .env("GAUDINLAB_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn list_enumerates_suites() {
    for args in [&["--list"][..], &["verify", "--list"][..]] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(0));
        let s = String::from_utf8(out.stdout).unwrap();
        assert_eq!(s.lines().count(), 11);
        for name in ["theorem1", "odd-symmetry", "cauchy-qt", "hl-gen"] {
            assert!(s.lines().any(|l| l.starts_with(name)));
        }
    }
}

#[test]
fn timeout_reports_failure() {
    let out = run(&["verify", "--suite", "theorem2", "--n", "3", "--r", "3", "--timeout", "0", "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(json(&out)["witness"].as_str().unwrap().contains("timeout"));
}
