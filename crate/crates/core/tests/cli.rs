use std::io::Write;
use std::process::Command;

use hec_sim::cli::{self, EXIT_DIST_CHECK_FAILED, EXIT_OK, EXIT_USAGE};
use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("hecsim").chain(args.iter().copied());
    let code = cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let (code, out, err) = run(&full);
    assert_eq!(code, EXIT_OK, "{err}");
    serde_json::from_str(&out).unwrap()
}

fn config_file(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn analytic_traditional_cost() {
    let (code, out, _) = run(&["analytic", "--profile", "traditional", "--p-edge", "0.8"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("66.58 USD"), "{out}");
}

#[test]
fn analytic_zero_split_equals_cloud() {
    let v = json(&["analytic", "--p-edge", "0"]);
    assert_eq!(v["energy_hec_kwh"], v["energy_cloud_only_kwh"]);
    assert_eq!(v["cost_hec_usd"], v["cost_cloud_only_usd"]);
}

#[test]
fn analytic_agentic_json_savings() {
    let v = json(&["analytic", "--profile", "agentic", "--p-edge", "0.8"]);
    let s = v["energy_savings"].as_f64().unwrap();
    assert_eq!(format!("{s:.4}"), "0.6182");
}

#[test]
fn simulate_single_all_edge_device() {
    let v = json(&["simulate", "--n-devices", "1", "--p-edge", "1.0"]);
    let energy = &v["aggregate"]["energy_hec"];
    assert_eq!(energy["std"].as_f64().unwrap(), 0.0);
    assert_eq!(energy["mean"].as_f64().unwrap(), 7300.0 * 0.5);
}

#[test]
fn simulate_alpha_three_close_to_alpha_two() {
    let a2 = json(&["simulate", "--n-devices", "4000"]);
    let a3 = json(&["simulate", "--n-devices", "4000", "--alpha", "3"]);
    let s2 = a2["aggregate"]["mean_energy_savings"].as_f64().unwrap();
    let s3 = a3["aggregate"]["mean_energy_savings"].as_f64().unwrap();
    assert!((s2 - 0.6182).abs() < 0.01);
    assert!((s2 - s3).abs() < 0.005, "{s2} vs {s3}");
}

#[test]
fn simulate_output_ignores_thread_count() {
    let a = run(&["simulate", "--n-devices", "700", "--threads", "1"]);
    let b = run(&["simulate", "--n-devices", "700", "--threads", "5"]);
    assert_eq!(a.0, EXIT_OK);
    assert_eq!(a.1, b.1);
    assert_eq!(run(&["simulate", "--threads", "0"]).0, EXIT_USAGE);
}

#[test]
fn sweep_rows() {
    let (code, out, _) = run(&["sweep", "--from", "0.5", "--to", "0.9", "--step", "0.1", "--source", "analytic", "--format", "csv"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().count(), 6);

    let (_, out, _) = run(&["sweep", "--from", "0.8", "--to", "0.8", "--step", "0.1", "--format", "csv"]);
    assert_eq!(out.lines().count(), 2);
    assert!(out.lines().nth(1).unwrap().contains("0.8000,"));
}

#[test]
fn sweep_both_pairs_rows() {
    let v = json(&["sweep", "--source", "both", "--n-devices", "2000"]);
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 10);
    for pair in rows.chunks(2) {
        assert_eq!(pair[0]["source"], "analytic");
        assert_eq!(pair[1]["source"], "monte_carlo");
        assert_eq!(pair[0]["p_edge"], pair[1]["p_edge"]);
        for key in ["energy_savings", "cost_savings"] {
            let gap = pair[0][key].as_f64().unwrap() - pair[1][key].as_f64().unwrap();
            assert!(gap.abs() < 0.01, "{key} gap {gap}");
        }
    }
}

#[test]
fn sweep_malformed_range() {
    let (code, _, err) = run(&["sweep", "--from", "0.9", "--to", "0.5"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("exceeds"), "{err}");
    assert_eq!(run(&["sweep", "--step", "0"]).0, EXIT_USAGE);
    assert_eq!(run(&["sweep", "--source", "nope"]).0, EXIT_USAGE);
}

#[test]
fn dist_check_paths() {
    let v = json(&["dist-check", "--alpha", "2", "--x-min", "1"]);
    assert_eq!(v["analytic_mean"].as_f64().unwrap(), 2.0);
    let v = json(&["dist-check", "--alpha", "3"]);
    assert_eq!(v["analytic_mean"].as_f64().unwrap(), 1.5);
    assert!(v["ks_statistic"].as_f64().unwrap() < 0.01);

    let (code, _, err) = run(&["dist-check", "--alpha", "0.9"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("infinite mean"), "{err}");
    assert_eq!(run(&["dist-check", "--samples", "10"]).0, EXIT_USAGE);
    assert_ne!(EXIT_DIST_CHECK_FAILED, EXIT_OK);
}

#[test]
fn reproduce_text_and_json() {
    let (code, out, _) = run(&["reproduce"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("agentic cloud energy: 16060.0 vs 16,060 — MATCH"));
    assert!(out.contains("traditional HEC energy: 735.84 vs 674 — KNOWN ERRATUM"));

    let v = json(&["reproduce"]);
    let entries = v["entries"].as_array().unwrap();
    let energy = entries.iter().find(|e| e["label"] == "agentic cloud energy").unwrap();
    assert!((energy["computed"].as_f64().unwrap() - 16060.0).abs() < 1e-9);
    assert_eq!(energy["status"], "match");
}

#[test]
fn config_layering() {
    let cfg = config_file("[split]\np_edge = 0.6\n[profile]\nlabel = \"traditional\"\n");
    let path = cfg.path().to_str().unwrap();
    // File beats default.
    let v = json(&["analytic", "--config", path]);
    assert_eq!(v["p_edge"].as_f64().unwrap(), 0.6);
    assert_eq!(v["annual_gb"].as_f64().unwrap(), 2.4 * 365.0);
    // Flag beats file.
    let v = json(&["analytic", "--config", path, "--p-edge", "0.3"]);
    assert_eq!(v["p_edge"].as_f64().unwrap(), 0.3);
    assert_eq!(v["annual_gb"].as_f64().unwrap(), 2.4 * 365.0);
    // Default where neither sets it.
    let v = json(&["analytic"]);
    assert_eq!(v["p_edge"].as_f64().unwrap(), 0.8);
}

#[test]
fn config_errors() {
    let cfg = config_file("[energy]\ne_lokal = 1.0\n");
    let (code, out, err) = run(&["analytic", "--config", cfg.path().to_str().unwrap()]);
    assert_eq!(code, EXIT_USAGE);
    assert!(out.is_empty());
    assert!(err.contains("e_lokal"), "{err}");

    let (code, _, err) = run(&["analytic", "--config", "/nonexistent/scenario.toml"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.starts_with("error:"));
    assert_eq!(run(&["bogus"]).0, EXIT_USAGE);
    assert_eq!(run(&["analytic", "--p-edge", "1.5"]).0, EXIT_USAGE);
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sweep.csv");
    let (code, out, _) = run(&["sweep", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    assert!(out.is_empty());
    let written = std::fs::read_to_string(path).unwrap();
    assert!(written.starts_with("p_edge,energy_hec_kwh,cost_hec_usd,energy_savings,cost_savings,source\n"));
}

#[test]
fn identical_invocations_identical_bytes() {
    let args = ["simulate", "--n-devices", "500", "--seed", "7", "--format", "json"];
    assert_eq!(run(&args).1, run(&args).1);
    let other = run(&["simulate", "--n-devices", "500", "--seed", "8", "--format", "json"]).1;
    assert_ne!(run(&args).1, other);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_hecsim");
    let ok = Command::new(bin).arg("reproduce").output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let bad = Command::new(bin).args(["dist-check", "--alpha", "0.9"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(1));
    assert!(!bad.stderr.is_empty());
    let help = Command::new(bin).arg("--help").output().unwrap();
    assert_eq!(help.status.code(), Some(0));
}
