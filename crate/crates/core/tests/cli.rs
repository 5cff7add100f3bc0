use serde_json::Value;
use std::path::PathBuf;
use std::process::{Command, Output};

fn verify(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_verify")).args(args).output().expect("binary runs")
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("gaudin-cli-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

fn reports(stdout: &[u8]) -> Vec<Value> {
    String::from_utf8_lossy(stdout).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

fn without_timing(mut v: Vec<Value>) -> Vec<Value> {
    for r in &mut v {
        r.as_object_mut().unwrap().remove("timing_ms");
    }
    v
}

#[test]
fn degree_violation_exits_two_and_names_the_constraint() {
    let spec = scratch(
        "bad.json",
        r#"{"instances":[{"kind":"classical-bosonic","M":1,"N":2,
            "divisor":[{"point":"1","degree":1}],"dual_divisor":[{"point":"5","degree":1}]}]}"#,
    );
    let out = verify(&[spec.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("Σ τ_i = N"));
    assert!(out.stdout.is_empty());
}

#[test]
fn validation_happens_before_any_instance_runs() {
    let spec = scratch(
        "mixed.json",
        r#"{"instances":[
            {"kind":"neumann","M":2},
            {"kind":"cyclotomic","M":1,"N":1,"tau0":2,"mu":"0","dual_divisor":[{"point":"5","degree":1}]}]}"#,
    );
    let out = verify(&[spec.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("instance 1"));
}

#[test]
fn unknown_preset_and_malformed_spec_exit_two() {
    assert_eq!(verify(&["--preset", "nope"]).status.code(), Some(2));
    let spec = scratch("malformed.json", r#"{"instances":[{"kind":"cyclotomic","M":1,"N":1,"tau0":1,"mu":"1/0",
        "dual_divisor":[{"point":"5","degree":1}]}]}"#);
    assert_eq!(verify(&[spec.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn neumann_preset_reports_the_common_polynomial() {
    let out = verify(&["--preset", "neumann", "--M", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let r = reports(&out.stdout);
    assert_eq!(r.len(), 1);
    assert_eq!(r[0]["status"], "pass");
    let common = r[0]["details"]["report"]["common"].as_str().unwrap();
    assert!(common.contains("lam^3"));
}

#[test]
fn paper_core_preset_passes_and_is_deterministic() {
    let path = std::env::temp_dir().join(format!("gaudin-cli-{}-core.jsonl", std::process::id()));
    let first = verify(&["--preset", "paper-core", "--out", path.to_str().unwrap()]);
    assert_eq!(first.status.code(), Some(0), "{}", String::from_utf8_lossy(&first.stderr));
    let a = reports(&std::fs::read(&path).unwrap());
    assert!(a.iter().all(|r| r["status"] == "pass"));
    let second = verify(&["--preset", "paper-core", "--jobs", "2"]);
    assert_eq!(without_timing(a), without_timing(reports(&second.stdout)));
}

#[test]
fn sampled_mode_runs_the_spec() {
    let spec = scratch(
        "sampled.json",
        r#"{"instances":[
            {"kind":"classical-bosonic","M":2,"N":2,"divisor":[{"point":"1/2","degree":2}],
             "dual_divisor":[{"point":"5","degree":1},{"point":"-7/3","degree":1}]},
            {"kind":"cyclotomic","M":2,"N":2,"tau0":1,"mu":"-1","divisor":[{"point":"2","degree":1}],
             "dual_divisor":[{"point":"5","degree":1},{"point":"7","degree":1}]}]}"#,
    );
    let out = verify(&["--sampled", spec.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let r = reports(&out.stdout);
    assert!(r.iter().all(|x| x["details"]["mode"] == "sampled"));
}

#[test]
fn term_ceiling_turns_into_an_error_report() {
    let spec = scratch(
        "ceiling.json",
        r#"{"instances":[{"kind":"classical-bosonic","M":2,"N":2,"divisor":[{"point":"1","degree":2}],
            "dual_divisor":[{"point":"5","degree":2}]}]}"#,
    );
    let out = verify(&["--max-terms", "3", spec.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let r = reports(&out.stdout);
    assert_eq!(r[0]["status"], "error");
    assert!(r[0]["witness"].as_str().unwrap().contains("ceiling"));
}
