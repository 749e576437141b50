//! End-to-end tests of the scenario binary: JSON schema, determinism, and
//! exit codes.

use std::process::Command;

fn binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_measure-completion"))
}

fn run_json(args: &[&str]) -> (serde_json::Value, bool) {
    let output = binary().args(args).arg("--json").arg("-").output().unwrap();
    let stdout = String::from_utf8(output.stdout).unwrap();
    let value = serde_json::from_str(&stdout)
        .unwrap_or_else(|e| panic!("bad JSON ({e}): {stdout}"));
    (value, output.status.success())
}

#[test]
fn cantor_scenario_emits_the_documented_schema() {
    let (report, ok) = run_json(&[
        "--scenario", "cantor",
        "--depth", "8",
        "--eps", "1/1000",
    ]);
    assert!(ok);
    assert_eq!(report["pass"], serde_json::Value::Bool(true));
    assert_eq!(report["scenario"]["name"], "cantor");
    assert_eq!(report["scenario"]["depth"], 8);
    assert_eq!(report["scenario"]["epsilon"], "1/1000");
    assert!(report["ms"].is_u64());
    let checks = report["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    for check in checks {
        assert!(check["name"].is_string());
        assert!(check["anchor"].is_string());
        assert!(check["values"].is_array());
        assert!(check["radius"].is_string());
        assert!(check["pass"].is_boolean());
        for v in check["values"].as_array().unwrap() {
            let s = v.as_str().expect("values are rational strings");
            assert!(!s.contains('.'), "no floating point in {s}");
        }
    }
}

#[test]
fn reports_are_deterministic_modulo_wall_time() {
    let args = [
        "--scenario", "finite-oracle",
        "--atoms", "5",
        "--seed", "42",
    ];
    let (mut first, ok1) = run_json(&args);
    let (mut second, ok2) = run_json(&args);
    assert!(ok1 && ok2);
    first["ms"] = 0.into();
    second["ms"] = 0.into();
    assert_eq!(first, second);
}

#[test]
fn parallel_flag_preserves_report_order() {
    let args = ["--scenario", "dyadic-join", "--eps", "1/1000"];
    let (mut sequential, sequential_ok) = run_json(&args);
    assert!(sequential_ok);
    let output = binary()
        .args(args)
        .args(["--parallel", "--json", "-"])
        .output()
        .unwrap();
    assert!(output.status.success());
    let mut parallel: serde_json::Value =
        serde_json::from_slice(&output.stdout).unwrap();
    sequential["ms"] = 0.into();
    parallel["ms"] = 0.into();
    assert_eq!(sequential, parallel);
}

#[test]
fn json_can_be_written_to_a_file() {
    let dir = std::env::temp_dir().join("measure-completion-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let status = binary()
        .args(["--scenario", "isometry", "--eps", "1/10000"])
        .arg("--json")
        .arg(&path)
        .status()
        .unwrap();
    assert!(status.success());
    let body = std::fs::read_to_string(&path).unwrap();
    let report: serde_json::Value = serde_json::from_str(&body).unwrap();
    assert_eq!(report["pass"], serde_json::Value::Bool(true));
    std::fs::remove_file(&path).ok();
}

#[test]
fn invalid_parameters_exit_with_code_two() {
    let unknown = binary()
        .args(["--scenario", "swamp", "--json", "-"])
        .output()
        .unwrap();
    assert_eq!(unknown.status.code(), Some(2));

    let bad_atoms = binary()
        .args(["--scenario", "finite-oracle", "--atoms", "40"])
        .output()
        .unwrap();
    assert_eq!(bad_atoms.status.code(), Some(2));

    let bad_eps = binary()
        .args(["--scenario", "svc", "--eps", "0"])
        .output()
        .unwrap();
    assert_eq!(bad_eps.status.code(), Some(2));

    let bad_depth = binary()
        .args(["--scenario", "svc", "--depth", "40"])
        .output()
        .unwrap();
    assert_eq!(bad_depth.status.code(), Some(2));
}

#[test]
fn human_summary_goes_to_stdout_without_json_flag() {
    let output = binary()
        .args(["--scenario", "cha-check", "--atoms", "4", "--eps", "1/1000"])
        .output()
        .unwrap();
    assert!(output.status.success());
    let stdout = String::from_utf8(output.stdout).unwrap();
    assert!(stdout.contains("scenario cha-check"));
    assert!(stdout.contains("overall: pass"));
}
