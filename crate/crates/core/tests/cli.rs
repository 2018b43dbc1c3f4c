//! The `hardy-verify` binary end to end.

use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hardy-verify")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn list_prints_one_line_per_case() {
    let o = run(&["list"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 11);
    assert!(lines.iter().all(|l| l.split('\t').count() == 3));
    assert!(lines[0].starts_with("ex1-stirling-gamma\t"));
}

#[test]
fn verify_known_recurrence_as_json() {
    let o = run(&["verify", "--id", "ex1-stirling-gamma", "--a", "2", "--k", "1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let reports = v.as_array().unwrap();
    assert_eq!(reports.len(), 1);
    let r = &reports[0];
    assert_eq!(r["identity_id"], "ex1-stirling-gamma");
    assert_eq!(r["pass"], true);
    assert_eq!(r["params"]["k"], 1);
    assert_eq!(r["params"]["a"].as_f64(), Some(2.0));
    for p in r["points"].as_array().unwrap() {
        for key in ["x", "lhs", "rhs", "abs_err", "rel_err", "pass", "form"] {
            assert!(p.get(key).is_some(), "point lacks {key}: {p}");
        }
    }
}

#[test]
fn unknown_id_exits_two_and_names_it() {
    let o = run(&["verify", "--id", "nosuch"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("nosuch"));
    assert!(o.stdout.is_empty());
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["verify", "--bogus"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--id", "ex4-legendre", "--abs-tol", "0"]).status.code(), Some(2));
    assert_eq!(run(&["sweep", "--id", "ex4-legendre", "--samples", "0"]).status.code(), Some(2));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn missed_tolerance_exits_one() {
    let o = run(&["verify", "--id", "ex5-hermite-erf", "--rel-tol", "1e-16", "--abs-tol", "1e-300"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL"));
}

#[test]
fn output_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.csv");
    let args = ["sweep", "--id", "ex6-laguerre,ex4-legendre", "--samples", "2", "--seed", "9", "--format", "csv"];
    let direct = run(&args);
    let mut with_output = args.to_vec();
    with_output.extend(["--output", path.to_str().unwrap()]);
    let to_file = run(&with_output);
    assert_eq!(to_file.status.code(), Some(0));
    assert!(to_file.stdout.is_empty());
    let written = std::fs::read(&path).unwrap();
    assert_eq!(written, direct.stdout);
    let text = String::from_utf8(written).unwrap();
    assert_eq!(text.lines().next().unwrap(), "identity_id,param_json,x,lhs,rhs,abs_err,rel_err,pass,form");
}

#[test]
fn seeded_sweeps_are_reproducible_and_seed_sensitive() {
    let args = |seed: &'static str| {
        ["sweep", "--id", "ex8-gaussian-hermite", "--samples", "3", "--seed", seed, "--format", "json"]
    };
    let a = run(&args("5"));
    assert_eq!(a.stdout, run(&args("5")).stdout);
    assert_ne!(a.stdout, run(&args("6")).stdout);
}

#[test]
fn grid_override_and_table_output() {
    let o = run(&["verify", "--id", "ex7-upper-gamma", "--x", "0.75,1.5"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("ex7-upper-gamma"));
    assert!(text.contains("PASS"));
}
