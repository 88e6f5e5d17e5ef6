//! End-to-end checks of the binary: parsing, exit codes, artifact shape,
//! and the byte-determinism contract.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_arpersist"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn classify_stretched_example() {
    let o = run(&["classify", "--coeffs", "-1,1,1"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["regime"]["class"]["tag"], "StretchedExponential");
    assert!((v["regime"]["class"]["alpha"].as_f64().unwrap() - 0.5).abs() < 1e-9);
    assert!(v["config_hash"].is_string());
}

#[test]
fn classify_from_zeros() {
    let o = run(&["classify", "--zeros", "2"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["regime"]["class"]["tag"], "Constant");

    // Conjugates completed: one entry of 0+1i yields degree 2.
    let o = run(&["classify", "--zeros", "0+1i"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["zeros"].as_array().unwrap().len(), 2);
}

#[test]
fn classify_exponential_example() {
    let o = run(&["classify", "--coeffs", "0.5"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["regime"]["class"]["tag"], "Exponential");
}

#[test]
fn missing_theta_is_usage_error() {
    let o = run(&["cone-exponent"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr.clone()).unwrap();
    assert!(err.to_lowercase().contains("usage"), "stderr: {err}");
}

#[test]
fn bad_polynomial_is_precondition_exit() {
    let o = run(&["classify", "--coeffs", "0,0"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn simulate_csv_shape_and_determinism() {
    let a = run(&["simulate", "--coeffs", "1", "--n", "10", "--seed", "42"]);
    let b = run(&["simulate", "--coeffs", "1", "--n", "10", "--seed", "42"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout, "same config, same bytes");
    let text = stdout(&a);
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with("# config_hash="));
    assert_eq!(lines.next().unwrap(), "n,value");
    assert_eq!(text.lines().filter(|l| !l.starts_with(['#', 'n', 's'])).count(), 10);

    let c = run(&["simulate", "--coeffs", "1", "--n", "10", "--seed", "43"]);
    assert_ne!(a.stdout, c.stdout, "different seed, different path");
}

#[test]
fn impulse_alternates_for_rotation() {
    let o = run(&["impulse", "--zeros", "0+1i", "--n", "4"]);
    let text = stdout(&o);
    let vals: Vec<f64> = text
        .lines()
        .skip(2)
        .take(5)
        .map(|l| l.split(',').nth(1).unwrap().parse().unwrap())
        .collect();
    assert_eq!(vals, vec![1.0, 0.0, -1.0, 0.0, 1.0]);
}

#[test]
fn persist_fit_roundtrip() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("rw.csv");
    let o = run(&[
        "persist",
        "--coeffs",
        "1",
        "--N-grid",
        "8,16,32,64",
        "--method",
        "naive",
        "--samples",
        "40000",
        "--seed",
        "7",
        "--out",
        csv.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    // The fit summary lands on stdout; the CSV is the artifact.
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let slope = v["fit"]["slope"].as_f64().unwrap();
    assert!((slope + 0.5).abs() < 0.1, "slope = {slope}");

    let o2 = run(&["fit", "--input", csv.to_str().unwrap(), "--model", "power-law"]);
    assert!(o2.status.success());
    let v2: serde_json::Value = serde_json::from_str(&stdout(&o2)).unwrap();
    assert_eq!(v2["fit"]["slope"], v["fit"]["slope"]);
}

#[test]
fn oracle_method_small_horizons() {
    let o = run(&["persist", "--coeffs", "1", "--N-grid", "2", "--method", "oracle"]);
    assert!(o.status.success());
    let row = stdout(&o).lines().nth(2).unwrap().to_string();
    let p: f64 = row.split(',').nth(1).unwrap().parse().unwrap();
    // P(xi_0 >= 0, xi_0 + xi_1 >= 0) = 3/8 exactly.
    assert!((p - 0.375).abs() < 1e-4, "p = {p}");
}

#[test]
fn cone_exponent_symbolic_angle() {
    let o = run(&["cone-exponent", "--theta", "pi/2", "--resolution", "32,64"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["rationality"]["q"], 4);
    let beta = v["eigen"]["beta"].as_f64().unwrap();
    assert!(beta > 0.0 && beta.is_finite());
}

#[test]
fn sweep_reports_positive_gap() {
    let o = run(&[
        "sweep",
        "--theta",
        "pi/2",
        "--offsets",
        "1e-2*sqrt2",
        "--resolution",
        "32,64",
    ]);
    assert!(o.status.success());
    let text = stdout(&o);
    let gaps: Vec<f64> = text
        .lines()
        .filter(|l| !l.starts_with(['#', 't', 's']) && l.split(',').count() == 4)
        .map(|l| l.rsplit(',').next().unwrap().parse().unwrap())
        .collect();
    assert_eq!(gaps.len(), 2, "base + one offset: {text}");
    assert_eq!(gaps[0], 0.0, "base row has zero gap");
    assert!(gaps[1] > 0.0, "irrational perturbation raises beta: {text}");
}
