use std::path::Path;
use std::process::{Command, Output};

const BIN: &str = env!("CARGO_BIN_EXE_ratcubic");

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).env_remove("RATCUBIC_OUT_DIR").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_str(stdout(o).trim()).unwrap();
    assert_eq!(v["schema"], 1);
    v
}

#[test]
fn invariants_golden_output() {
    let o = run(&["invariants", "--coeffs", "2,3,-1,-3,1,2,-3,1"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), include_str!("golden/invariants.json"));
    // Same bytes as the library record, with the schema tag in front.
    let record = include_str!("../../core/tests/golden/record.json").trim();
    assert_eq!(stdout(&o).trim(), format!("{{\"schema\":1,{}", &record[1..]));
    assert!(stdout(&o).contains("\"j6\":\"89360\""));
    // --json is accepted everywhere; invariants is always JSON.
    assert_eq!(stdout(&run(&["--json", "invariants", "--coeffs", "2,3,-1,-3,1,2,-3,1"])), stdout(&o));
}

#[test]
fn coefficient_order_flag() {
    let desc = run(&["invariants", "--coeffs", "2,3,-1,-3,1,2,-3,1"]);
    let asc = run(&["invariants", "--order", "asc", "--coeffs", "-3,-1,3,2,1,-3,2,1"]);
    assert_eq!(stdout(&desc), stdout(&asc));
    let a4 = run(&["classify", "--coeffs", "1,0,0,-3,0,-3,0,0"]);
    assert_eq!(stdout(&a4).trim(), "A4");
}

#[test]
fn classify_examples() {
    let o = run(&["classify", "--coeffs", "0,0,0,1,1,0,0,0"]);
    assert_eq!((o.status.code(), stdout(&o).trim()), (Some(0), "D4"));
    let v = json(&run(&["--json", "classify", "--coeffs", "0,0,0,1,1,0,0,0"]));
    assert_eq!((v["aut"].as_str(), v["locus"].as_str(), v["code"].as_u64()), (Some("D4"), Some("L7"), Some(3)));
    let o = run(&["classify", "--coeffs", "1,0,0,0,1,0,0,0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not a degree-3 rational map (I6 = 0)"));
    let o = run(&["classify", "--coeffs", "1/2,0,0,1,1,0,0,0"]);
    assert_eq!(stdout(&o).trim(), "{e}");
}

#[test]
fn validation_errors_exit_two() {
    for args in [
        &["classify", "--coeffs", "1,2,3"][..],
        &["classify", "--coeffs", "a,0,0,1,1,0,0,0"],
        &["classify", "--coeffs", "0,0,0,1,1,0,0,0", "--unknown"],
        &["conjugate", "--coeffs", "0,0,0,1,1,0,0,0", "--sigma", "1,1,1,1"],
        &["invariants", "--coeffs", "2,0,0,2,2,0,0,0"],
        &["invariants", "--coeffs", "1/2,0,0,1,1,0,0,0"],
        &["stats", "--input", "/definitely/missing.jsonl"],
        &["ml", "--height", "1", "--test-fraction", "1.5"],
        &["ml"],
        &["frobnicate"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    }
}

#[test]
fn help_for_every_command() {
    for cmd in ["invariants", "classify", "conjugate", "generate", "stats", "ml"] {
        let o = run(&[cmd, "--help"]);
        assert!(o.status.success());
        assert!(stdout(&o).contains("Usage"), "{cmd}");
    }
}

#[test]
fn conjugate_prints_tuple() {
    // z -> 1/z conjugation swaps numerator and denominator with reversed coefficients.
    let o = run(&["conjugate", "--coeffs", "0,0,0,1,1,0,0,0", "--sigma", "0,1,1,0"]);
    let back: Vec<i64> = stdout(&o).trim().split(',').map(|s| s.parse().unwrap()).collect();
    assert_eq!(back.len(), 8);
    let d4 = run(&["classify", "--coeffs", stdout(&o).trim()]);
    assert_eq!(stdout(&d4).trim(), "D4");
    let scaled = run(&["conjugate", "--coeffs", "2,3,-1,-3,1,2,-3,1", "--sigma", "2,0,0,1"]);
    let v = json(&run(&["--json", "conjugate", "--coeffs", "2,3,-1,-3,1,2,-3,1", "--sigma", "2,0,0,1"]));
    assert_eq!(v["coeffs"].as_array().unwrap().len(), 8);
    assert_eq!(v["order"], "desc");
    let text: Vec<String> = v["coeffs"].as_array().unwrap().iter().map(|c| c.as_str().unwrap().to_string()).collect();
    assert_eq!(stdout(&scaled).trim(), text.join(","));
}

#[test]
fn generate_and_stats() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("nested/h1.jsonl");
    let csv = dir.path().join("h1.csv");
    let o = run(&["generate", "--height", "1", "--out", out.to_str().unwrap(), "--csv", csv.to_str().unwrap()]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("2248") && text.contains("L7 D4"));
    let s1 = stdout(&run(&["stats", "--input", out.to_str().unwrap()]));
    let s2 = stdout(&run(&["stats", "--input", csv.to_str().unwrap()]));
    assert_eq!(s1, s2);
    assert!(text.ends_with(&s1));
    let v = json(&run(&["--json", "stats", "--input", out.to_str().unwrap()]));
    assert_eq!(v["total"], 2248);
    assert_eq!(v["by_height"]["1"][0], 2128);
    assert_eq!(v["labels"][7], "D4");

    let all = dir.path().join("all.jsonl");
    let v = json(&run(&["--json", "generate", "--height", "1", "--dedupe-antipodal", "false", "--out", all.to_str().unwrap()]));
    assert_eq!(v["total"], 4496);
}

#[test]
fn default_output_directory_from_env() {
    let dir = tempfile::tempdir().unwrap();
    let o = Command::new(BIN)
        .args(["generate", "--height", "1", "--workers", "2"])
        .env("RATCUBIC_OUT_DIR", dir.path())
        .output()
        .unwrap();
    assert!(o.status.success());
    assert!(Path::new(&dir.path().join("p3_h1.jsonl")).exists());
}

#[test]
fn ml_command() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("report.json");
    let args = ["--json", "ml", "--height", "1", "--trees", "5", "--features", "coeffs", "--weighted", "off"];
    let mut with_report = args.to_vec();
    with_report.extend(["--report", report.to_str().unwrap()]);
    let v = json(&run(&with_report));
    assert_eq!(v["config"]["features"], "coeffs");
    assert_eq!(v["config"]["weighted"], false);
    assert_eq!(v["train_rows"].as_u64().unwrap() + v["test_rows"].as_u64().unwrap(), 2248);
    let saved: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(saved, v);
    let text = stdout(&run(&["ml", "--height", "1", "--trees", "5"]));
    assert!(text.contains("Macro avg") && text.contains("features=invariants"));
}
