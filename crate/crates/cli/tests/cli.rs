use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_u1kepler"))
        .args(args)
        .env_remove("U1KEPLER_TOL_RADIAL")
        .env_remove("U1KEPLER_TOL_MICZ")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn spectrum_csv_hydrogen_rows() {
    let o = run(&[
        "spectrum", "--n", "2", "--sigma", "0", "--levels", "3", "--format", "csv",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines[0],
        "I,energy_exact,energy_float,degeneracy,left_ktype,right_ktype"
    );
    let rows: Vec<(String, f64, String)> = lines[1..]
        .iter()
        .map(|l| {
            let f: Vec<&str> = l.split(',').collect();
            assert_eq!(f.len(), 6);
            (f[0].to_string(), f[2].parse().unwrap(), f[3].to_string())
        })
        .collect();
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[0], ("0".into(), -0.5, "1".into()));
    assert_eq!(rows[1], ("1".into(), -0.125, "4".into()));
    assert_eq!(rows[2].0, "2");
    assert_eq!(rows[2].1, -1.0 / 18.0);
    assert_eq!(rows[2].2, "9");
    assert!(lines[3].starts_with("2,-1/18,-0.05555555555555555,9,"));
}

#[test]
fn dimension_equality_suite_exits_zero() {
    let o = run(&["verify", "--suite", "dimension-equality", "--n", "3", "--kmax", "20"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn n_below_two_is_a_config_error() {
    let o = run(&["spectrum", "--n", "1", "--levels", "3"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("n ≥ 2"), "{err}");
    assert_eq!(run(&["verify", "--suite", "radial", "--n", "0"]).status.code(), Some(2));
}

#[test]
fn invalid_configuration_exits_two() {
    assert_eq!(run(&["spectrum", "--n", "2", "--bogus"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--suite", "no-such-suite"]).status.code(), Some(2));
    assert_eq!(run(&["ktypes", "--n", "2", "--imax", "-1"]).status.code(), Some(2));
    assert_eq!(run(&["--tol-gram", "0", "spectrum", "--n", "2"]).status.code(), Some(2));
    assert_eq!(run(&["radial", "--n", "2", "--k", "0"]).status.code(), Some(2));
}

#[test]
fn failed_check_exits_one_with_failure_list() {
    let o = run(&[
        "radial",
        "--n",
        "2",
        "--k",
        "2",
        "--l",
        "1",
        "--tol-radial",
        "1e-30",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let failures = v["failures"].as_array().unwrap();
    assert_eq!(failures.len(), 1);
    assert_eq!(failures[0]["suite"], "radial");
}

#[test]
fn env_tolerance_override() {
    let o = Command::new(env!("CARGO_BIN_EXE_u1kepler"))
        .args(["radial", "--n", "2"])
        .env("U1KEPLER_TOL_RADIAL", "1e-30")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn json_report_shape_and_exact_floats() {
    let o = run(&[
        "spectrum", "--n", "3", "--sigma", "1", "--levels", "4", "--format", "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    for key in ["params", "results", "failures", "version"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    let r = &v["results"][2];
    assert_eq!(r["energy_exact"], "-1/32");
    assert_eq!(r["energy_float"], -1.0 / 32.0);
    assert_eq!(v["params"]["hw_label"], "[-1/2 -1/2 -1/2 3/2 1/2 1/2]");
}

#[test]
fn ktypes_report_passes() {
    let o = run(&["ktypes", "--n", "4", "--sigma", "-3", "--imax", "6", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["params"]["kappa"], "1/2");
    assert_eq!(v["results"].as_array().unwrap().len(), 7);
}

#[test]
fn profiles_sample_as_csv() {
    let o = run(&[
        "radial", "--n", "3", "--sigma", "1", "--k", "2", "--l", "1", "--points", "50", "--format", "csv",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("rho,value\n"));
    assert_eq!(text.lines().count(), 51);

    let o = run(&[
        "oscillator",
        "--n",
        "3",
        "--sigma",
        "2",
        "--k",
        "2",
        "--l",
        "1",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["params"]["eigenvalue"], 9);
    assert_eq!(
        v["results"][0].as_object().unwrap().keys().collect::<Vec<_>>(),
        ["r", "value"]
    );
}

#[test]
fn output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for path in [&a, &b] {
        let o = run(&[
            "geometry-check",
            "--seed",
            "99",
            "--samples",
            "200",
            "--format",
            "json",
            "--output",
            path.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0));
        assert!(o.stdout.is_empty());
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn micz_and_geometry_checks_pass() {
    assert_eq!(
        run(&["micz-check", "--sigma", "3", "--imax", "4"]).status.code(),
        Some(0)
    );
    assert_eq!(
        run(&["geometry-check", "--n", "4", "--samples", "300"]).status.code(),
        Some(0)
    );
}

#[test]
fn hydrogen_and_spectrum_suites_pass() {
    for suite in ["hydrogen", "spectrum", "casimir", "generating-function"] {
        let o = run(&["verify", "--suite", suite, "--n", "3", "--kmax", "10"]);
        assert_eq!(o.status.code(), Some(0), "{suite}");
    }
}
