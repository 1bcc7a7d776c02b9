use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use higgs_core::PoincareSeries;
use serde_json::Value;

fn higgs(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_higgs"))
        .args(args)
        .output()
        .expect("failed to run higgs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

fn cache_files(dir: &Path) -> Vec<std::path::PathBuf> {
    fs::read_dir(dir)
        .map(|rd| rd.map(|e| e.unwrap().path()).collect())
        .unwrap_or_default()
}

#[test]
fn betti_both_sides_match_for_genus_two() {
    let out = higgs(&["betti", "--g", "2", "--n", "0", "--d", "1", "--side", "both", "--no-cache"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.trim_end().ends_with("MATCH"));
    assert!(text.contains("ring   P_t = 1 + 4t + 7t^2"));

    let out = higgs(&["betti", "--g", "2", "--format", "json", "--no-cache"]);
    let v = json(&out);
    assert_eq!(v["match"], Value::Bool(true));
    let ring: PoincareSeries = serde_json::from_value(v["ring"].clone()).unwrap();
    let morse: PoincareSeries = serde_json::from_value(v["morse"].clone()).unwrap();
    assert_eq!(ring, morse);
    assert_eq!(ring.degree(), Some(10));
}

#[test]
fn betti_genus_one_is_the_jacobian() {
    let out = higgs(&["betti", "--g", "1", "--format", "json", "--no-cache"]);
    let v = json(&out);
    let expected = serde_json::to_value(PoincareSeries::polynomial([1, 2, 1])).unwrap();
    assert_eq!(v["ring"], expected);
    assert_eq!(v["morse"], expected);
}

#[test]
fn ring_side_refuses_positive_pole_order() {
    let out = higgs(&["betti", "--g", "2", "--n", "3", "--d", "1", "--side", "ring", "--no-cache"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("n = 0"), "{}", stderr(&out));
}

#[test]
fn truncated_ring_side_compares_through_maxdeg() {
    let out = higgs(&["betti", "--g", "3", "--maxdeg", "4", "--format", "csv", "--no-cache"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.starts_with("degree,ring,morse\n0,1,1\n1,6,6\n"));
}

#[test]
fn strata_table_and_guards() {
    let out = higgs(&[
        "strata", "--g", "2", "--n", "2", "--r", "2", "--d", "1", "--max", "3", "--format", "json",
        "--no-cache",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let rows = json(&out)["rows"].as_array().unwrap().clone();
    assert_eq!(rows.len(), 4);
    assert_eq!(rows[0]["exact_codim"], Value::Null);
    assert_eq!(rows[1]["exact_codim"], Value::from(4));
    assert_eq!(rows[2]["exact_codim"], Value::Null);
    assert_eq!(rows[2]["chi_bound"], Value::from(4));

    let out = higgs(&["strata", "--g", "2", "--r", "3", "--no-cache"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("not implemented: rank > 2"));

    let out = higgs(&["strata", "--g", "2", "--d", "2", "--no-cache"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("d must be odd"));
}

#[test]
fn stabilize_columns_converge() {
    let out = higgs(&[
        "stabilize", "--g", "2", "--d", "1", "--maxn", "6", "--deg", "6", "--format", "json",
        "--no-cache",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let rows: Vec<Vec<u64>> = v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r.as_array().unwrap().iter().map(|c| c.as_str().unwrap().parse().unwrap()).collect())
        .collect();
    let bg: Vec<u64> = v["classifying"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_str().unwrap().parse().unwrap())
        .collect();
    assert_eq!(rows.len(), 7);
    assert!(rows.iter().all(|r| r[0] == 1 && r[1] == 4));
    for w in rows.windows(2) {
        assert!(w[0].iter().zip(&w[1]).all(|(a, b)| a <= b));
    }
    assert_eq!(rows.last().unwrap(), &bg);
    assert_eq!(v["monotone"], Value::Bool(true));

    let out = higgs(&["stabilize", "--g", "2", "--maxn", "0", "--no-cache"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn csv_lists_degree_coefficient_rows() {
    let out = higgs(&["betti", "--g", "2", "--side", "morse", "--format", "csv", "--no-cache"]);
    let text = stdout(&out);
    let lines: Vec<_> = text.lines().collect();
    assert_eq!(lines[0], "degree,coefficient");
    assert_eq!(lines[1], "0,1");
    assert_eq!(lines.len(), 12);
}

#[test]
fn output_is_deterministic() {
    let args = ["stabilize", "--g", "3", "--maxn", "3", "--deg", "8", "--no-cache"];
    assert_eq!(higgs(&args).stdout, higgs(&args).stdout);
}

#[test]
fn cache_round_trip_and_bypass() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache");
    let cache_arg = cache.to_str().unwrap();
    let args = ["betti", "--g", "2", "--format", "json", "--cache-dir", cache_arg];

    let first = higgs(&args);
    assert_eq!(first.status.code(), Some(0));
    let files = cache_files(&cache);
    assert_eq!(files.len(), 1);
    let stored = fs::read(&files[0]).unwrap();

    let second = higgs(&[&args[..], &["--verify-cache", "--verbose"]].concat());
    assert_eq!(second.status.code(), Some(0), "{}", stderr(&second));
    assert!(stderr(&second).contains("cache hit"));
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(fs::read(&files[0]).unwrap(), stored);

    // a different command or parameter set is a different entry
    higgs(&["betti", "--g", "1", "--cache-dir", cache_arg]);
    assert_eq!(cache_files(&cache).len(), 2);

    let bypass = dir.path().join("unused");
    let out = higgs(&["betti", "--g", "1", "--no-cache", "--cache-dir", bypass.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(!bypass.exists());
}

#[test]
fn corrupt_cache_entry_is_recomputed() {
    let dir = tempfile::tempdir().unwrap();
    let cache_arg = dir.path().to_str().unwrap();
    let args = ["strata", "--g", "2", "--format", "json", "--cache-dir", cache_arg];
    let clean = higgs(&args);
    let entry = cache_files(dir.path()).pop().unwrap();
    let good = fs::read(&entry).unwrap();

    fs::write(&entry, b"{ not json").unwrap();
    let out = higgs(&args);
    assert_eq!(out.status.code(), Some(0));
    assert!(stderr(&out).contains("corrupt cache entry"));
    assert_eq!(out.stdout, clean.stdout);
    assert_eq!(fs::read(&entry).unwrap(), good);
}

#[test]
fn tampered_cache_fails_verification_with_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let cache_arg = dir.path().to_str().unwrap();
    let args = ["betti", "--g", "2", "--cache-dir", cache_arg];
    higgs(&args);
    let entry = cache_files(dir.path()).pop().unwrap();

    let mut report: Value = serde_json::from_slice(&fs::read(&entry).unwrap()).unwrap();
    report["morse"]["coeffs"][0] = Value::from("2");
    report["match"] = Value::Bool(false);
    fs::write(&entry, serde_json::to_vec(&report).unwrap()).unwrap();

    let out = higgs(&[&args[..], &["--verify-cache"]].concat());
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("differs from recomputation"));

    // without verification the stored mismatch verdict itself gates the exit code
    let out = higgs(&args);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).contains("MISMATCH"));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(higgs(&["betti"]).status.code(), Some(1));
    assert_eq!(higgs(&["bogus"]).status.code(), Some(1));
    assert_eq!(higgs(&["betti", "--g", "2", "--d", "4", "--no-cache"]).status.code(), Some(1));
    assert_eq!(higgs(&["--help"]).status.code(), Some(0));
}
