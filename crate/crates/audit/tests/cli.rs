use std::process::{Command, Output};

use serde_json::Value;

fn smul(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_smul")).args(args).env_remove("SMUL_BUDGET").output().expect("smul runs")
}

fn json_of(out: &Output) -> Value {
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn strongmul_reports_t_and_witness() {
    let v = json_of(&smul(&["strongmul", "Zn 6", "<3>"]));
    assert_eq!(v["verdict"], true);
    assert_eq!(v["t"], "3");
    assert_eq!(v["witness"], "3");
    assert_eq!(v["tests_agree"], true);
}

#[test]
fn sminimal_on_zn4_zn9() {
    let v = json_of(&smul(&["sminimal", "Zn 4 x Zn 9", "<(1,0)>"]));
    let r = v["result"].as_array().unwrap();
    assert_eq!(r.len(), 1);
    assert_eq!(r[0]["ideal"], "2Z4 x 0");
    assert_eq!(r[0]["prime"], false);
    assert_eq!(r[0]["witness"].as_array().unwrap().len(), 2);
}

#[test]
fn krull_and_sprime_over_z() {
    let v = json_of(&smul(&["krull", "Zn 6", "<3>"]));
    assert_eq!(v["found_elements"], serde_json::json!(["0", "2", "4"]));
    let v = json_of(&smul(&["sprime", "Z", "complement (2)", "(18)"]));
    assert_eq!(v["s_prime"], true);
    assert_eq!(v["s"], 9);
}

#[test]
fn parse_error_points_at_column() {
    let out = smul(&["strongmul", "Zn 4 /", "<1>"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("column 7"), "{err}");
    assert!(err.contains("      ^"), "{err}");
}

#[test]
fn budget_flag_and_env() {
    assert_eq!(smul(&["strongmul", "Zn 100", "<1>"]).status.code(), Some(2));
    assert_eq!(smul(&["--budget", "128", "strongmul", "Zn 100", "<1>"]).status.code(), Some(0));
    let out = Command::new(env!("CARGO_BIN_EXE_smul"))
        .args(["strongmul", "Zn 100", "<1>"])
        .env("SMUL_BUDGET", "100")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let out = Command::new(env!("CARGO_BIN_EXE_smul"))
        .args(["strongmul", "Zn 12", "<1>"])
        .env("SMUL_BUDGET", "8")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn audit_one_replay() {
    let v = json_of(&smul(&["audit-one", "counterexample2"]));
    let claims = v["claims"].as_array().unwrap();
    assert_eq!(claims.len(), 1);
    assert_eq!(claims[0]["verdict"], "PASS");
    assert_eq!(claims[0]["sub_claims"].as_array().unwrap().len(), 16);
    assert_eq!(smul(&["audit-one", "counterexample9"]).status.code(), Some(2));
}

#[test]
fn mutated_colon_is_caught() {
    let dir = std::env::temp_dir().join(format!("smul-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("mutant.json");
    let out = smul(&["audit", "--mutate-colon", "--claim", "prop.colon", "--json", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let fail = v["claims"].as_array().unwrap().iter().find(|c| c["verdict"] == "FAIL").expect("a FAIL record");
    assert!(!fail["witness"].as_array().unwrap().is_empty());
    assert_eq!(smul(&["audit", "--claim", "prop.colon"]).status.code(), Some(0));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn smaller_budget_sweeps_less() {
    let pass_count = |budget: &str| {
        let out = smul(&["--budget", budget, "audit", "--claim", "prop.mmc"]);
        assert_eq!(out.status.code(), Some(0));
        let text = String::from_utf8_lossy(&out.stdout).to_string();
        let line = text.lines().find(|l| l.starts_with("prop.mmc")).unwrap().to_string();
        line.split_whitespace().nth(2).unwrap().parse::<usize>().unwrap()
    };
    assert!(pass_count("16") < pass_count("64"));
}

#[test]
fn reports_match_the_shipped_schema() {
    let schema: Value = serde_json::from_str(include_str!("../../../docs/report.schema.json")).unwrap();
    let validator = jsonschema::validator_for(&schema).expect("schema compiles");
    let mut reports = vec![json_of(&smul(&["audit-one", "counterexample4"])), json_of(&smul(&["audit-one", "skip.out-of-scope"]))];
    let dir = std::env::temp_dir().join(format!("smul-schema-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("mutant.json");
    smul(&["--budget", "12", "audit", "--mutate-colon", "--claim", "prop.colon", "--json", path.to_str().unwrap()]);
    reports.push(serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap());
    std::fs::remove_dir_all(&dir).ok();
    for r in &reports {
        let errors: Vec<String> = validator.iter_errors(r).map(|e| e.to_string()).collect();
        assert!(errors.is_empty(), "{errors:?}");
    }
    let mut broken = reports[2].clone();
    let first_fail = broken["claims"].as_array_mut().unwrap().iter_mut().find(|c| c["verdict"] == "FAIL").unwrap();
    first_fail["witness"] = serde_json::json!([]);
    assert!(!validator.is_valid(&broken), "a FAIL without a witness must not validate");
    // the mutant report exercises FAIL and the budget SKIPs
    let verdicts: Vec<&str> = reports[2]["claims"].as_array().unwrap().iter().filter_map(|c| c["verdict"].as_str()).collect();
    assert!(verdicts.contains(&"FAIL") && verdicts.contains(&"SKIP"));
}
