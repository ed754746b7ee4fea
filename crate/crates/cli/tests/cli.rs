use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use bergman_cli::collect;
use bergman_cli::config::RunConfig;
use bergman_cli::csv_io::{read_reports, write_reports};
use bergman_cli::suites::Suite;
use bergman_core::report::CheckReport;
use tempfile::TempDir;

fn bergman(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bergman"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn small_config() -> RunConfig {
    RunConfig {
        alpha: vec![0.0, 1.5],
        beta: vec![-0.5, 0.5],
        p: vec![2.0],
        nr: 32,
        ntheta: 64,
        family_size: 4,
        scan_family_size: 2,
        ..RunConfig::default()
    }
}

fn same_bits(a: f64, b: f64) -> bool {
    a.to_bits() == b.to_bits() || (a.is_nan() && b.is_nan())
}

fn assert_same(a: &CheckReport, b: &CheckReport) {
    assert_eq!(a.check_id, b.check_id);
    assert_eq!(a.params.len(), b.params.len());
    for ((k1, v1), (k2, v2)) in a.params.iter().zip(&b.params) {
        assert_eq!(k1, k2);
        assert!(same_bits(*v1, *v2), "{k1}: {v1} vs {v2}");
    }
    assert!(same_bits(a.lhs, b.lhs) && same_bits(a.rhs, b.rhs) && same_bits(a.margin, b.margin));
    assert_eq!(a.verdict, b.verdict);
    assert_eq!(a.provenance, b.provenance);
    assert_eq!(a.runtime_ms, b.runtime_ms);
}

#[test]
fn csv_round_trip_is_lossless() {
    let config = small_config();
    for suite in [Suite::Toeplitz, Suite::Zeros, Suite::Asymptotics] {
        let (reports, _) = collect(&config, suite);
        assert!(!reports.is_empty());
        let mut buf = Vec::new();
        write_reports(&mut buf, &reports).unwrap();
        let back = read_reports(buf.as_slice()).unwrap();
        assert_eq!(back.len(), reports.len());
        for (a, b) in reports.iter().zip(&back) {
            assert_same(a, b);
        }
    }
}

#[test]
fn empty_report_list_gives_header_only() {
    let mut buf = Vec::new();
    write_reports(&mut buf, &[]).unwrap();
    assert_eq!(buf, b"check_id,params,lhs,rhs,margin,pass,provenance,runtime_ms\n");
    assert!(read_reports(buf.as_slice()).unwrap().is_empty());
}

#[test]
fn reports_are_sorted_canonically() {
    let (reports, _) = collect(&small_config(), Suite::Basis);
    for w in reports.windows(2) {
        assert!(w[0].check_id <= w[1].check_id);
    }
}

#[test]
fn repeated_runs_are_byte_identical() {
    let dir = TempDir::new().unwrap();
    let run = |name: &str| {
        let out = dir.path().join(name);
        let o = bergman(&[
            "verify", "kernel", "--alpha", "0,2.5", "--beta", "-0.5,1", "--p", "2", "--seed", "7", "--no-timing",
            "--out", out.to_str().unwrap(),
        ]);
        assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
        fs::read(out).unwrap()
    };
    assert_eq!(run("a.csv"), run("b.csv"));
}

#[test]
fn exit_code_tracks_failures() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("r.csv");
    let o = bergman(&["verify", "basis", "--alpha", "0", "--beta", "0", "--p", "2", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));

    // two radial nodes cannot integrate the Gram matrix up to degree 20
    let o = bergman(&["verify", "basis", "--alpha", "0", "--beta", "0", "--p", "2", "--nr", "2", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let reports = read_reports(fs::File::open(&out).unwrap()).unwrap();
    assert!(reports.iter().any(|r| r.check_id == "basis.gram" && !r.passed()));

    // a generous override turns the failure into a pass
    let o = bergman(&[
        "verify", "basis", "--alpha", "0", "--beta", "0", "--p", "2", "--nr", "2", "--tol-override", "basis.gram=10",
        "--tol-override", "basis.monomial_norm=10", "--out", out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn informational_reports_do_not_fail_the_run() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("z.csv");
    let o = bergman(&["verify", "zeros", "--alpha", "0", "--beta", "0.5", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let reports = read_reports(fs::File::open(&out).unwrap()).unwrap();
    assert!(!reports.is_empty());
    assert!(reports.iter().all(|r| r.verdict.to_string() == "informational"));
}

#[test]
fn config_errors_stop_before_computation() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("never.csv");
    let o = bergman(&["verify", "all", "--alpha", "-1.5", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("alpha"));
    assert!(!out.exists());

    let o = bergman(&["verify", "all", "--tol-override", "nope=1", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!out.exists());

    let cfg = dir.path().join("bad.json");
    fs::write(&cfg, r#"{"nr": 1}"#).unwrap();
    let o = bergman(&["verify", "all", "--config", cfg.to_str().unwrap(), "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!out.exists());
}

#[test]
fn json_config_with_flag_overrides() {
    let dir = TempDir::new().unwrap();
    let cfg = dir.path().join("run.json");
    fs::write(&cfg, r#"{"alpha": [1.0], "beta": [0.0, 2.5], "p": [3.0], "seed": 3}"#).unwrap();
    let out = dir.path().join("r.csv");
    let o = bergman(&["verify", "basis", "--config", cfg.to_str().unwrap(), "--beta", "1", "--out", out.to_str().unwrap()]);
    assert!(o.status.success());
    let reports = read_reports(fs::File::open(&out).unwrap()).unwrap();
    let masses: Vec<_> = reports.iter().filter(|r| r.check_id == "basis.mass").collect();
    assert_eq!(masses.len(), 1);
    assert_eq!(masses[0].params["alpha"], 1.0);
    assert_eq!(masses[0].params["beta"], 1.0);
}

#[test]
fn svg_plots_are_written() {
    let dir = TempDir::new().unwrap();
    let plots = dir.path().join("plots");
    let out = dir.path().join("r.csv");
    let o = bergman(&[
        "verify", "asymptotics", "--svg-dir", plots.to_str().unwrap(), "--out", out.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let svg = fs::read_to_string(plots.join("i_omega_fits.svg")).unwrap();
    assert!(svg.starts_with("<svg") && svg.trim_end().ends_with("</svg>"));
    assert!(Path::new(&out).exists());
}

#[test]
fn stdout_output_when_no_path() {
    let o = bergman(&["verify", "asymptotics"]);
    assert!(o.status.success());
    let reports = read_reports(o.stdout.as_slice()).unwrap();
    assert_eq!(reports.len(), 5);
}
