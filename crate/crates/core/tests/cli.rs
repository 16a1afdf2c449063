mod common;

use std::process::{Command, Output};

fn fracspec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fracspec"))
        .args(args)
        .env_remove("FRACSPEC_MAX_TERMS")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn legendre_even_quadratic() {
    let out = fracspec(&[
        "legendre", "--alpha", "1", "--lambda", "6", "--parity", "even", "--xmin", "-0.95", "--xmax", "0.95",
        "--steps", "100",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let (header, rows) = common::parse_csv(&stdout(&out));
    assert_eq!(header, ["x", "p"]);
    assert_eq!(rows.len(), 101);
    for row in &rows {
        let (x, p) = (row[0].unwrap(), row[1].unwrap());
        assert!((p - (1.0 - 3.0 * x * x)).abs() < 1e-8, "x = {x}: {p}");
    }
    assert_eq!(rows[0][0], Some(-0.95));
    assert_eq!(rows[100][0], Some(0.95));
}

#[test]
fn surface_edge_matches_rho() {
    let out = fracspec(&[
        "bessel-surface",
        "--alpha-min",
        "0.5",
        "--alpha-max",
        "1",
        "--rho-min",
        "0",
        "--rho-max",
        "5",
        "--steps",
        "50",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let (header, rows) = common::parse_csv(&stdout(&out));
    assert_eq!(header, ["alpha", "rho", "nu"]);
    let row = rows
        .iter()
        .find(|r| r[0] == Some(1.0) && r[1] == Some(3.0))
        .expect("row at alpha 1, rho 3");
    assert!((row[2].unwrap() - 3.0).abs() < 1e-8);
}

#[test]
fn conf_hyper_reaches_e() {
    let out = fracspec(&[
        "conf-hyper",
        "--alpha",
        "1",
        "--a",
        "1",
        "--c",
        "1",
        "--zmax",
        "1",
        "--steps",
        "10",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert_eq!(text.lines().next(), Some("z,y"));
    assert_eq!(text.lines().last(), Some("1.00000000e0,2.71828183e0"));
}

#[test]
fn validation_errors_exit_2() {
    let out = fracspec(&["legendre", "--alpha", "1.5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(stderr(&out).contains("--alpha"));

    let out = fracspec(&["caputo", "--no-such-flag"]);
    assert_eq!(out.status.code(), Some(2));

    let out = fracspec(&[]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn numeric_failures_exit_3() {
    let out = fracspec(&["gauss-hyper", "--zmax", "1"]);
    assert_eq!(out.status.code(), Some(3));
    let err = stderr(&out);
    assert!(err.contains("did not converge") && err.contains("z = 1"), "{err}");

    let out = fracspec(&["bessel", "--nu", "3", "--rho-scan-min", "4", "--rho-scan-max", "6"]);
    assert_eq!(out.status.code(), Some(3));
    let err = stderr(&out);
    assert!(err.contains("no root") && err.contains("nu = 3"), "{err}");
}

#[test]
fn divergent_points_can_be_skipped() {
    let out = fracspec(&["gauss-hyper", "--zmax", "1", "--skip-divergent"]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stdout(&out).ends_with("1.00000000e0,\n"));
}

#[test]
fn environment_caps_series_terms() {
    let out = Command::new(env!("CARGO_BIN_EXE_fracspec"))
        .args(["conf-hyper", "--zmax", "1"])
        .env("FRACSPEC_MAX_TERMS", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("after 5 terms"));

    let out = Command::new(env!("CARGO_BIN_EXE_fracspec"))
        .args(["conf-hyper", "--zmax", "1", "--max-terms", "500"])
        .env("FRACSPEC_MAX_TERMS", "5")
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", stderr(&out));
}

#[test]
fn show_defaults_lists_subcommands() {
    let out = fracspec(&["--show-defaults"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text
        .lines()
        .any(|l| l.starts_with("legendre ") && l.contains("--lambda 6")));
    assert!(text.lines().any(|l| l.starts_with("heat-check ")));
}

#[test]
fn output_is_deterministic_and_file_backed() {
    let args = ["bessel", "--alpha", "0.8", "--nu", "1", "--steps", "40"];
    let first = fracspec(&args);
    let second = fracspec(&args);
    assert!(first.status.success(), "{}", stderr(&first));
    assert_eq!(first.stdout, second.stdout);
    assert!(stderr(&first).contains("using rho"));

    let path = std::env::temp_dir().join(format!("fracspec-cli-{}.csv", std::process::id()));
    let path_str = path.to_str().unwrap();
    let mut with_file = args.to_vec();
    with_file.extend(["--output", path_str]);
    let out = fracspec(&with_file);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read(&path).unwrap(), first.stdout);
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn residual_checks_pass() {
    for sub in ["laplace-check", "heat-check"] {
        let out = fracspec(&[sub]);
        assert!(out.status.success(), "{sub}: {}", stderr(&out));
    }
}
