//! End-to-end tests of the `bgcheb` binary: golden outputs, exit codes,
//! determinism, config-file handling, and artifact round-trips.

use std::path::Path;
use std::process::{Command, Output};

use bgcheb::PointSet;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_bgcheb"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "exit {:?}, stderr: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 stdout")
}

fn exit_code(args: &[&str]) -> i32 {
    run(args).status.code().expect("exit code")
}

#[test]
fn classical_three_point_family_prints_exact_csv() {
    let out = stdout_of(&[
        "points", "--kind", "lobatto", "--count", "3", "--beta", "0", "--gamma", "0",
    ]);
    assert_eq!(out, "1\n0\n-1\n");
}

#[test]
fn left_trimmed_family_reads_closed_form_at_dropped_endpoint() {
    let out = stdout_of(&["lebesgue", "--family", "beta-bar", "--n", "5", "--at", "-1"]);
    assert_eq!(out, "9\n");
}

#[test]
fn eval_command_matches_hand_values() {
    let out = stdout_of(&["eval", "--n", "2", "--at", "0.5"]);
    assert_eq!(out, "-0.5\n");
    // Recurrence route agrees on the same input.
    let out = stdout_of(&["eval", "--n", "2", "--at", "0.5", "--method", "recurrence"]);
    assert_eq!(out, "-0.5\n");
    // Companion of the classical n = 3 member vanishes at 0.5 (up to the
    // roundoff of the printed evaluation).
    let out = stdout_of(&["eval", "--n", "3", "--at", "0.5", "--method", "companion"]);
    let v: f64 = out.trim().parse().unwrap();
    assert!(v.abs() < 1e-12, "{v}");
    // At the endpoint the zero is exact.
    let out = stdout_of(&["eval", "--n", "3", "--at", "1", "--method", "companion"]);
    assert_eq!(out, "0\n");
}

#[test]
fn domain_errors_exit_one_with_diagnostic() {
    let out = run(&[
        "points", "--kind", "lobatto", "--count", "3", "--beta", "3/2", "--gamma", "3/4",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("domain error"), "{err}");
    assert!(out.stdout.is_empty());
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(exit_code(&["no-such-command"]), 2);
    assert_eq!(exit_code(&["points", "--kind", "lobatto"]), 2);
    assert_eq!(exit_code(&["lebesgue", "--family", "beta-bar"]), 2);
    // Decimal text for an exact flag is a parse-level usage error.
    assert_eq!(
        exit_code(&["points", "--kind", "lobatto", "--count", "3", "--beta", "0.5"]),
        2
    );
    // Neither a single pair nor a table requested.
    assert_eq!(exit_code(&["ortho", "--beta", "1/3"]), 2);
    assert_eq!(exit_code(&[]), 2);
}

#[test]
fn float_escape_hatch_supplies_parameters_but_disables_classify() {
    let out = stdout_of(&[
        "points",
        "--kind",
        "lobatto",
        "--count",
        "4",
        "--beta-float",
        "0.25",
    ]);
    assert_eq!(out.lines().count(), 4);

    let res = run(&["classify", "--n", "4", "--beta-float", "0.25"]);
    assert_eq!(res.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&res.stderr).contains("float-backed"));
}

#[test]
fn classify_reports_collapse_with_verification() {
    let out = stdout_of(&[
        "classify",
        "--n",
        "4",
        "--beta",
        "1/2",
        "--gamma",
        "1/2",
        "--verify-grid",
        "501",
    ]);
    assert!(out.contains("\"status\": \"Cosine\""), "{out}");
    assert!(out.contains("\"degree\": 8"), "{out}");
    assert!(out.contains("\"sign\": 1"), "{out}");
    assert!(out.contains("\"max_deviation\""), "{out}");

    let out = stdout_of(&["classify", "--n", "5", "--beta", "1/7", "--gamma", "0"]);
    assert!(out.contains("\"status\": \"NotPolynomial\""), "{out}");
    assert!(out.contains("70/13"), "{out}");
}

#[test]
fn repeated_runs_are_byte_identical() {
    let args = [
        "ortho",
        "--max-index",
        "4",
        "--beta",
        "1/3",
        "--gamma",
        "1/5",
    ];
    assert_eq!(stdout_of(&args), stdout_of(&args));

    let args = ["figures", "--id", "4-left"];
    assert_eq!(stdout_of(&args), stdout_of(&args));

    let args = [
        "lebesgue", "--count", "9", "--beta", "1/3", "--gamma", "1/6",
    ];
    assert_eq!(stdout_of(&args), stdout_of(&args));
}

#[test]
fn thread_cap_does_not_change_results() {
    let args = [
        "sweep", "--rule", "beta", "--n-lo", "5", "--n-hi", "8", "--j-lo", "0", "--j-hi", "10",
    ];
    let single = bin()
        .args(args)
        .env("BGCHEB_THREADS", "1")
        .output()
        .expect("binary runs");
    let parallel = bin()
        .args(args)
        .env("BGCHEB_THREADS", "4")
        .output()
        .expect("binary runs");
    assert!(single.status.success() && parallel.status.success());
    assert_eq!(single.stdout, parallel.stdout);
    assert!(String::from_utf8_lossy(&single.stdout)
        .starts_with("n,param_value,lebesgue_constant,argmax\n"));
}

#[test]
fn json_output_round_trips_to_the_same_point_set() {
    let json = stdout_of(&[
        "points",
        "--kind",
        "first-kind",
        "--count",
        "7",
        "--beta",
        "1/3",
        "--gamma",
        "1/5",
        "--format",
        "json",
    ]);
    let parsed = PointSet::from_json(&json).expect("valid artifact");
    assert_eq!(parsed.len(), 7);

    let csv = stdout_of(&[
        "points",
        "--kind",
        "first-kind",
        "--count",
        "7",
        "--beta",
        "1/3",
        "--gamma",
        "1/5",
    ]);
    let from_csv: Vec<f64> = csv.lines().map(|l| l.parse().unwrap()).collect();
    assert_eq!(parsed.abscissae(), from_csv.as_slice());

    // Re-serializing reproduces the emitted artifact byte for byte.
    let again = parsed.to_json().expect("serializes") + "\n";
    assert_eq!(json, again);
}

#[test]
fn config_file_replaces_flags() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = dir.path().join("run.json");
    std::fs::write(
        &path,
        r#"{"command": "points", "kind": "lobatto", "count": 3}"#,
    )
    .expect("write config");

    let out = stdout_of(&["--config", path.to_str().unwrap()]);
    assert_eq!(out, "1\n0\n-1\n");

    // Config plus subcommand is ambiguous.
    let both = run(&[
        "--config",
        path.to_str().unwrap(),
        "points",
        "--kind",
        "lobatto",
        "--count",
        "3",
    ]);
    assert_eq!(both.status.code(), Some(2));

    // Unknown field or malformed JSON is a usage error.
    std::fs::write(&path, r#"{"command": "points", "kinds": "lobatto"}"#).unwrap();
    assert_eq!(exit_code(&["--config", path.to_str().unwrap()]), 2);
}

#[test]
fn output_flag_writes_the_same_bytes_as_stdout() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = dir.path().join("nodes.csv");
    let streamed = stdout_of(&[
        "points", "--kind", "extrema", "--count", "5", "--beta", "1/4", "--gamma", "1/8",
    ]);
    let silent = stdout_of(&[
        "points",
        "--kind",
        "extrema",
        "--count",
        "5",
        "--beta",
        "1/4",
        "--gamma",
        "1/8",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert!(silent.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), streamed);
}

#[test]
fn multi_file_figures_land_in_the_output_dir() {
    let dir = tempfile::tempdir().expect("tempdir");
    let out = stdout_of(&[
        "figures",
        "--id",
        "2",
        "--output-dir",
        dir.path().to_str().unwrap(),
    ]);
    let listed: Vec<&str> = out.lines().collect();
    assert_eq!(listed.len(), 6);
    for name in [
        "fig2-left-curves.csv",
        "fig2-left-zeros.csv",
        "fig2-left-endpoint-family.csv",
        "fig2-right-curves.csv",
        "fig2-right-zeros.csv",
        "fig2-right-endpoint-family.csv",
    ] {
        let path = dir.path().join(name);
        assert!(Path::new(&path).exists(), "{name} missing");
        let contents = std::fs::read_to_string(&path).unwrap();
        assert!(contents.ends_with('\n'));
    }
}

#[test]
fn equispaced_nodes_map_onto_trigonometric_ones() {
    let mapped = stdout_of(&[
        "points",
        "--kind",
        "equispaced-first-kind",
        "--count",
        "6",
        "--beta",
        "1/2",
        "--gamma",
        "1/4",
        "--map-alpha",
        "1",
    ]);
    let direct = stdout_of(&[
        "points",
        "--kind",
        "first-kind",
        "--count",
        "6",
        "--beta",
        "1/2",
        "--gamma",
        "1/4",
    ]);
    let m: Vec<f64> = mapped.lines().map(|l| l.parse().unwrap()).collect();
    let d: Vec<f64> = direct.lines().map(|l| l.parse().unwrap()).collect();
    for (a, b) in m.iter().zip(&d) {
        assert!((a - b).abs() < 1e-14, "{a} vs {b}");
    }
}

#[test]
fn threshold_and_conjecture_table() {
    let out = stdout_of(&["lebesgue", "--threshold", "--n", "1"]);
    let v: f64 = out.trim().parse().unwrap();
    assert!((v - 0.304_788).abs() < 1e-5, "{v}");

    let table = stdout_of(&["lebesgue", "--conjecture-table", "--n", "6"]);
    let mut lines = table.lines();
    assert_eq!(
        lines.next(),
        Some("n,lebesgue_constant,argmax,closed_form,holds")
    );
    assert_eq!(table.lines().count(), 1 + 5);
    for line in lines {
        assert!(line.ends_with(",true"), "{line}");
    }
}
