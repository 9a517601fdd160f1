use std::process::{Command, Output};

use serde_json::Value;

fn tqa(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tqa"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is a JSON report")
}

#[test]
fn markov_example() {
    let out = tqa(&["verify", "casimir", "--family", "o", "--n", "3", "--set", "det"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["summary"]["fail"], 0);
    let checks = r["checks"].as_array().unwrap();
    assert!(checks.iter().any(|c| c["id"] == "o3/markov" && c["status"] == "pass"));
    let ids: Vec<&str> = checks.iter().map(|c| c["id"].as_str().unwrap()).collect();
    assert!(ids.windows(2).all(|w| w[0] <= w[1]), "checks sorted by id");
    assert!(checks
        .iter()
        .all(|c| (c["status"] == "pass") == c.get("witness").is_none()));
}

#[test]
fn small_examples_pass() {
    for args in [
        &["verify", "tensor", "--suite", "ybe", "--n", "2"][..],
        &["verify", "braid-o", "--n", "2"],
    ] {
        let out = tqa(args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        assert!(report(&out)["summary"]["pass"].as_u64().unwrap() > 0);
    }
}

#[test]
fn reports_are_deterministic() {
    let args = ["verify", "confluence", "--family", "o", "--n", "3", "--seed", "7"];
    let (a, b) = (tqa(&args), tqa(&args));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(report(&a)["seed"], 7);
}

#[test]
fn findings_do_not_fail() {
    let out = tqa(&["verify", "casimir", "--family", "sp", "--n", "2", "--set", "conjecture"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(report(&out)["summary"]["finding"].as_u64().unwrap() > 0);
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let out = tqa(&["verify", "gamma2", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let r: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(r["suite"], "gamma2");
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["verify", "nope"][..],
        &["verify", "casimir", "--n", "9"],
        &["verify", "poisson", "--family", "gl"],
        &["verify", "casimir", "--set", "bogus"],
        &["verify", "gamma2", "--n", "3"],
        &["algebra", "dump", "--family", "sp", "--n", "0"],
    ] {
        assert_eq!(tqa(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn non_termination_exits_3() {
    let out = Command::new(env!("CARGO_BIN_EXE_tqa"))
        .args(["verify", "casimir", "--family", "o", "--n", "3", "--set", "quantum"])
        .env("TQA_REWRITE_CAP", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("s[2,1]"));
}

#[test]
fn dump_lists_rules() {
    let out = tqa(&["algebra", "dump", "--family", "o", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 3);
    assert!(text.starts_with("s[3,1]*s[2,1] -> 1 q s[2,1]*s[3,1]"));
    let gl = String::from_utf8(tqa(&["algebra", "dump", "--family", "gl", "--n", "2"]).stdout).unwrap();
    assert!(gl.lines().any(|l| l == "t[2,2]*t[2,1] -> 1 q t[2,1]*t[2,2]"));
}
