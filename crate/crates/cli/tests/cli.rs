use std::path::{Path, PathBuf};
use std::process::{Command, Output};

const SUITES: [&str; 8] = ["identities", "eigen", "classifier", "homology", "harmonic", "spectral", "sigma", "propositions"];

fn phom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_phom")).args(args).env_remove("PHOM_OUT_DIR").output().expect("runs")
}

fn golden(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

#[test]
fn golden_reports_for_every_suite() {
    for suite in SUITES {
        let out = phom(&["report", "--structure", "DrinfeldSklyanin", "--n", "2", "--suite", suite]);
        assert_eq!(out.status.code(), Some(0), "{suite}: {}", String::from_utf8_lossy(&out.stderr));
        let path = golden(&format!("{suite}.json"));
        if std::env::var_os("PHOM_UPDATE_GOLDEN").is_some() {
            std::fs::write(&path, &out.stdout).unwrap();
        }
        let want = std::fs::read(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert!(out.stdout == want, "{suite} report differs from {}", path.display());
    }
}

#[test]
fn identical_runs_give_identical_bytes() {
    let args = ["report", "--structure", "SchubertDSEx4", "--n", "2", "--weight-cutoff", "3"];
    let a = phom(&args);
    let b = phom(&args);
    assert_eq!(a.status.code(), Some(0), "{}", String::from_utf8_lossy(&a.stderr));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn json_round_trip() {
    let out = phom(&["report", "--n", "2", "--suite", "homology,spectral,eigen"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["config"]["suites"], serde_json::json!(["homology", "spectral", "eigen"]));
    let again = serde_json::to_vec_pretty(&v).unwrap();
    let reparsed: serde_json::Value = serde_json::from_slice(&again).unwrap();
    assert_eq!(v, reparsed);
}

#[test]
fn usage_errors() {
    assert_eq!(phom(&["check", "--structure", "Unknown"]).status.code(), Some(2));
    assert_eq!(phom(&["check", "--n", "1"]).status.code(), Some(2));
    assert_eq!(phom(&["check", "--suite", "bogus"]).status.code(), Some(2));
    assert_eq!(phom(&["check", "--format", "xml"]).status.code(), Some(2));
    assert_eq!(phom(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn unsupported_suite_is_structural() {
    let out = phom(&["homology", "--structure", "RMatrixSec1", "--suite", "homology"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn io_failures_carry_the_path() {
    let dir = tempfile::tempdir().unwrap();
    let blocker = dir.path().join("file");
    std::fs::write(&blocker, b"").unwrap();
    let target = blocker.join("report.json");
    let out = phom(&["check", "--suite", "eigen", "--out", target.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&out.stderr).contains("file"));
}

#[test]
fn skew_polynomial_csv() {
    let out = phom(&["homology", "--structure", "SkewPolyEx3", "--n", "2", "--weight-cutoff", "4", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("structure,n,form_degree,m,l,weight,dim,rank_in,rank_out,homology_dim"));
    // z1 has weight 1 and z2 weight 2: weight w carries one class per variable whose weight divides w
    for line in lines {
        let f: Vec<&str> = line.split(',').collect();
        let (k, w, h): (usize, i64, usize) = (f[2].parse().unwrap(), f[5].parse().unwrap(), f[9].parse().unwrap());
        let divisors = [1, 2].iter().filter(|&&d| w > 0 && w % d == 0).count();
        let want = match k {
            0 if w == 0 => 1,
            0 | 1 => divisors,
            _ => 0,
        };
        assert_eq!(h, want, "{line}");
    }
}

#[test]
fn out_dir_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_phom"))
        .args(["spectral", "--n", "2", "--format", "csv"])
        .env("PHOM_OUT_DIR", dir.path())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let written = std::fs::read_to_string(dir.path().join("DrinfeldSklyanin-n2-spectral.csv")).unwrap();
    assert!(written.starts_with("structure,n,form_degree"));
}

#[test]
fn timing_and_jobs() {
    let out = phom(&["check", "--suite", "eigen", "--timing", "--jobs", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v["results"][0]["elapsed_ms"].is_u64());
}

#[test]
fn catalog_lists_structures() {
    let out = phom(&["catalog", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("DrinfeldSklyanin (n=2)") && text.contains("SchubertPi1Ex4 (n=2)"));
    assert_eq!(phom(&["catalog", "--structure", "Nope"]).status.code(), Some(2));
}

#[test]
fn empty_suite_list_via_unapplicable_defaults() {
    // the spectral default is dropped for structures without a weight split
    let out = phom(&["spectral", "--structure", "KirillovViaH"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["results"], serde_json::json!([]));
}
