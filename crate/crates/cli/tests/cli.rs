use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn zfpoly(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zfpoly")).args(args).env_remove("ZFPOLY_MAX_N").output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let out = zfpoly(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    stdout(&out)
}

fn code(args: &[&str]) -> i32 {
    zfpoly(args).status.code().expect("exit code")
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(ok(args).trim()).unwrap()
}

#[test]
fn pretty_wheel() {
    assert_eq!(ok(&["poly", "--family", "wheel:5", "--pretty"]).trim(), "8x^3 + 5x^4 + x^5");
}

#[test]
fn json_polynomials() {
    assert_eq!(ok(&["poly", "--family", "path:1"]).trim(), r#"{"n":1,"coeffs":["0","1"]}"#);
    let v = json(&["poly", "--family", "multipartite:2,3"]);
    assert_eq!(v["n"], 5);
    assert_eq!(v["coeffs"], serde_json::json!(["0", "0", "0", "6", "5", "1"]));
}

#[test]
fn edge_list_matches_closed_form() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "# P_4\n4 3\n0 1\n1 2\n2 3").unwrap();
    let path = file.path().to_str().unwrap();
    let brute = ok(&["poly", "--edge-list", path, "--method", "brute"]);
    let closed = ok(&["poly", "--family", "path:4", "--method", "closed"]);
    assert_eq!(brute, closed);
}

#[test]
fn graph6_string_and_file() {
    assert_eq!(json(&["poly", "--graph6", "Bg"])["coeffs"], serde_json::json!(["0", "2", "3", "1"]));
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "\nCr").unwrap();
    let from_file = json(&["poly", "--graph6", file.path().to_str().unwrap()]);
    assert_eq!(from_file["n"], 4);
    assert_eq!(code(&["poly", "--graph6", "!!"]), 2);
}

#[test]
fn methods_agree_on_families() {
    let families = [
        "path:9", "cycle:8", "complete:6", "wheel:4", "wheel:9", "multipartite:2,2,3", "threshold:11011",
        "threshold:0011001", "cycle-chord:7:1:4", "subdivided-k4",
    ];
    for fam in families {
        let brute = ok(&["poly", "--family", fam]);
        assert_eq!(ok(&["poly", "--family", fam, "--method", "closed"]), brute, "{fam}");
        assert_eq!(ok(&["poly", "--family", fam, "--method", "components"]), brute, "{fam}");
        assert_eq!(ok(&["poly", "--family", fam, "--memoized"]), brute, "{fam}");
    }
    for n in 5..=12 {
        let fam = format!("wheel:{n}");
        assert_eq!(ok(&["poly", "--family", &fam, "--method", "closed"]), ok(&["poly", "--family", &fam]));
    }
}

#[test]
fn method_mismatch_exits_4() {
    assert_eq!(code(&["poly", "--graph6", "Bg", "--method", "closed"]), 4);
    assert_eq!(code(&["poly", "--family", "star:5", "--method", "closed"]), 4);
    assert_eq!(code(&["poly", "--family", "multipartite:2,1", "--method", "closed"]), 4);
    assert_eq!(code(&["poly", "--family", "threshold:0101", "--method", "closed"]), 4);
    assert_eq!(code(&["poly", "--family", "threshold:110", "--method", "closed"]), 4);
}

#[test]
fn parse_errors_exit_2() {
    assert_eq!(code(&["forts", "--family", "cycle:2"]), 2);
    assert_eq!(code(&["poly", "--family", "hypercube:3"]), 2);
    assert_eq!(code(&["poly"]), 2);
    assert_eq!(code(&["poly", "--family", "path:3", "--graph6", "Bg"]), 2);
    assert_eq!(code(&["poly", "--edge-list", "/nonexistent/graph.el"]), 2);
    assert_eq!(code(&["eval", "--family", "path:3", "--at", "one"]), 2);
    assert_eq!(code(&["check", "--suite", "bogus"]), 2);
}

#[test]
fn size_cap_exits_3() {
    assert_eq!(code(&["poly", "--family", "path:30"]), 3);
    assert_eq!(code(&["poly", "--family", "path:70"]), 3);
    let out = Command::new(env!("CARGO_BIN_EXE_zfpoly"))
        .args(["poly", "--family", "path:10"])
        .env("ZFPOLY_MAX_N", "8")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    // closed forms are not enumerations
    assert!(ok(&["poly", "--family", "path:30", "--method", "closed"]).contains(r#""n":30"#));
}

#[test]
fn forts_output() {
    let v = json(&["forts", "--family", "path:3"]);
    assert_eq!(v["forts"], serde_json::json!([[0, 2], [0, 1, 2]]));
    assert!(v.get("cover").is_none());
    let v = json(&["forts", "--family", "complete:4", "--min-cover"]);
    assert_eq!(v["cover"]["size"], 3);
    assert_eq!(v["cover"]["witness"], serde_json::json!([0, 1, 2]));
}

#[test]
fn eval_values() {
    assert_eq!(ok(&["eval", "--family", "path:4", "--at", "1"]).trim(), "13");
    assert_eq!(ok(&["eval", "--family", "complete:3", "--at", "0"]).trim(), "0");
    assert_eq!(ok(&["eval", "--family", "cycle:4", "--at", "2"]).trim(), "64");
    assert_eq!(ok(&["eval", "--family", "path:4", "--at", "1/2"]).trim(), "49/16");
    assert_eq!(ok(&["eval", "--family", "path:4", "--at", "-1", "--method", "closed"]).trim(), "1");
}

#[test]
fn check_suites() {
    let out = ok(&["check", "--suite", "hall", "--max-n", "6"]);
    let last: Value = serde_json::from_str(out.lines().last().unwrap()).unwrap();
    assert_eq!(last["record"], "summary");
    assert_eq!(last["passed"], true);
    let out = ok(&["check", "--suite", "closed-forms", "--max-n", "9"]);
    assert!(out.lines().all(|l| l.contains(r#""record":"summary""#)));
    assert_eq!(code(&["check", "--suite", "closed-forms", "--max-n", "40"]), 3);
}

#[test]
fn check_is_deterministic_across_jobs() {
    let args = ["check", "--suite", "conjectures", "--max-n", "5", "--seed", "9"];
    let one = ok(&args);
    let mut with_jobs = args.to_vec();
    with_jobs.extend(["--jobs", "3"]);
    assert_eq!(ok(&with_jobs), one);
}
