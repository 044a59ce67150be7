use serde_json::Value;
use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_liouville")).args(args).output().unwrap()
}

fn read_json(p: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(p).unwrap()).unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn output_is_deterministic_with_full_precision() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a"), dir.path().join("b"));
    for d in [&a, &b] {
        assert_eq!(run(&["eigfun", "--preset", "cl", "--out", path(d)]).status.code(), Some(0));
    }
    for f in ["eigfun.json", "eigfun_grid.csv"] {
        assert_eq!(std::fs::read(a.join(f)).unwrap(), std::fs::read(b.join(f)).unwrap(), "{f}");
    }
    let csv = std::fs::read_to_string(a.join("eigfun_grid.csv")).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("Q,r,re_f,im_f"));
    let first: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(first.len(), 4);
    for cell in first {
        let mantissa = cell.split('e').next().unwrap().trim_start_matches('-');
        assert_eq!(mantissa.replace('.', "").len(), 17, "{cell}");
        cell.parse::<f64>().unwrap();
    }
}

#[test]
fn flags_override_config() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("c.json");
    std::fs::write(&cfg, r#"{"model":"kl","m_max":3,"out":"ignored"}"#).unwrap();
    let out = dir.path().join("o");
    let o = run(&["spectrum", "--config", path(&cfg), "--m-max", "1", "--preset", "hpz", "--out", path(&out)]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stdout));
    let v = read_json(&out.join("spectrum.json"));
    assert_eq!(v["model"], "hpz");
    assert_eq!(v["eigenvalues"].as_array().unwrap().len(), 4);
    assert!(!Path::new("ignored").exists());
}

#[test]
fn reduce_steps_replay_when_fed_back() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("c.json");
    let coeffs = r#""coefficients":{"h":[2.5,0.4,-0.7],"gamma":0.4,"g":[-1.5,0.3,0.2]}"#;
    std::fs::write(&cfg, format!("{{{coeffs}}}")).unwrap();
    let first = dir.path().join("first");
    assert_eq!(run(&["reduce", "--config", path(&cfg), "--out", path(&first)]).status.code(), Some(0));
    let plan = read_json(&first.join("reduce.json"));
    assert!(plan["replay_residual"].as_f64().unwrap() < 1e-10);
    let again = dir.path().join("again.json");
    std::fs::write(&again, format!("{{{coeffs},\"steps\":{}}}", plan["steps"])).unwrap();
    let second = dir.path().join("second");
    assert_eq!(run(&["reduce", "--config", path(&again), "--out", path(&second)]).status.code(), Some(0));
    let v = read_json(&second.join("reduce.json"));
    assert!(v["input_steps"]["distance_to_target"].as_f64().unwrap() < 1e-10);
}

#[test]
fn tolerance_failure_exits_three_with_artifacts() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&["verify", "--basis-n", "12", "--tol", "1e-30", "--out", path(dir.path())]);
    assert_eq!(o.status.code(), Some(3));
    let v = read_json(&dir.path().join("verify.json"));
    assert_eq!(v["pass"], false);
}

#[test]
fn verify_passes_for_presets() {
    let dir = tempfile::tempdir().unwrap();
    for p in ["kl", "cl", "hpz"] {
        let out = dir.path().join(p);
        let o = run(&["verify", "--preset", p, "--basis-n", "24", "--out", path(&out)]);
        assert_eq!(o.status.code(), Some(0), "{p}");
        let v = read_json(&out.join("verify.json"));
        assert!(v["max_residual"].as_f64().unwrap() < 1e-10);
    }
}

#[test]
fn validation_errors_are_machine_readable() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("c.json");
    std::fs::write(
        &cfg,
        r#"{"coefficients":{"h":[2,0,0],"gamma":0.3,"g":[-1,0,0]},"preset":{"omega0":1,"gamma":0.3,"b":1},"model":"kl"}"#,
    )
    .unwrap();
    let out = dir.path().join("o");
    let o = run(&["spectrum", "--config", path(&cfg), "--out", path(&out)]);
    assert_eq!(o.status.code(), Some(2));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["error"]["kind"], "ConfigError");
    assert!(!out.exists());

    let o = run(&["spectrum", "--preset", "nope"]);
    assert_eq!(o.status.code(), Some(2));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["error"]["kind"], "UsageError");

    let o = run(&["eigfun", "--config", "/nonexistent/config.json"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn stationary_reports_transformed_state() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("c.json");
    std::fs::write(&cfg, r#"{"model":"kl","steps":[{"generator":"L1PLUS","param":0.1}]}"#).unwrap();
    assert_eq!(run(&["stationary", "--config", path(&cfg), "--out", path(dir.path())]).status.code(), Some(0));
    let v = read_json(&dir.path().join("stationary.json"));
    assert!((v["gaussian"]["mu"].as_f64().unwrap() - 0.25).abs() < 1e-15);
    assert!(v["transformed"]["gaussian"]["nu"].as_f64().unwrap() >= 0.0);
}
