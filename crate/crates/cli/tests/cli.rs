use std::fs;
use std::process::{Command, Output};

fn exreg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_exreg"))
        .args(args)
        .env("EXREG_THREADS", "2")
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
fn prop_2f4_q8_r7() {
    let out = exreg(&["prop", "--family", "2F4", "--q", "8", "--r", "7"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("25/49 (≈0.5102)\n"), "{}", stdout(&out));
}

#[test]
fn prop_2b2_r5() {
    let out = exreg(&["prop", "--family", "2B2", "--q", "8", "--r", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("4/5 "));
}

#[test]
fn prop_simple_group() {
    let out = exreg(&["prop", "--family", "E7", "--q", "3", "--r", "2", "--simple"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("simple=true"), "{text}");
    assert!(text.contains("|Z|_r=2"), "{text}");
}

#[test]
fn engines_agree_on_builtin_catalogs() {
    for (fam, q, r) in [("2F4", "8", "7"), ("2F4", "32", "3"), ("2B2", "32", "5"), ("2G2", "27", "7")] {
        let out = exreg(&["prop", "--family", fam, "--q", q, "--r", r, "--engine", "both"]);
        assert_eq!(out.status.code(), Some(0), "{fam} {q} {r}");
        assert!(stdout(&out).contains("agree=true"));
    }
}

#[test]
fn json_record_fields() {
    let out = exreg(&["prop", "--family", "2F4", "--q", "8", "--r", "7", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["value_num"], "25");
    assert_eq!(v["value_den"], "49");
    assert_eq!(v["e"], 1);
    assert_eq!(v["row"], "2F4/e=1");
    assert_eq!(v["engine"], "formula");
}

#[test]
fn non_prime_r_is_usage_error() {
    let out = exreg(&["prop", "--family", "2F4", "--q", "8", "--r", "9"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_family_is_usage_error() {
    let out = exreg(&["prop", "--family", "H4", "--q", "8", "--r", "7"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn defining_characteristic_is_domain_error() {
    let out = exreg(&["prop", "--family", "2F4", "--q", "8", "--r", "2"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("defining characteristic"));
}

#[test]
fn invalid_q_is_domain_error() {
    let out = exreg(&["prop", "--family", "2F4", "--q", "4", "--r", "3"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("2^f with f odd"));
    let out = exreg(&["prop", "--family", "E8", "--q", "6", "--r", "5"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn torus_engine_without_catalog_is_domain_error() {
    let out = exreg(&["prop", "--family", "E8", "--q", "2", "--r", "5", "--engine", "torus"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("catalog unavailable"));
}

#[test]
fn constants_listing() {
    let out = exreg(&["constants"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 11);
    assert!(text.contains("2F4  7/16"));
    assert!(text.contains("global minimum 3577/18432"));
}

#[test]
fn table_2b2() {
    let out = exreg(&["table", "--family", "2B2"]);
    assert_eq!(stdout(&out), "e=1: 1/2 + 1/2·φ⁻¹\ne=4: 3/4 + 1/4·φ⁻¹\n");
}

#[test]
fn catalog_round_trip() {
    let out = exreg(&["catalog", "--family", "2F4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let parsed = exreg_core::torus::load_catalog(&text).unwrap();
    assert_eq!(parsed.classes.len(), 11);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("2f4.cat");
    fs::write(&path, &text).unwrap();
    let p = path.to_str().unwrap();
    let out = exreg(&["catalog", "--path", p, "--validate"]);
    assert_eq!(out.status.code(), Some(0));
    let out = exreg(&["prop", "--family", "2F4", "--q", "8", "--r", "7", "--engine", "torus", "--catalog", p]);
    assert!(stdout(&out).starts_with("25/49"));
}

#[test]
fn catalog_unavailable_names_missing_families() {
    let out = exreg(&["catalog", "--family", "E8"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("catalog unavailable for E8"));
}

#[test]
fn validate_reports_bad_weights() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.cat");
    fs::write(&path, "family 2B2\nclass 1 weight 1/2 factors cyc:1\nclass 2 weight 1/4 factors tw:b2+\n").unwrap();
    let out = exreg(&["catalog", "--path", path.to_str().unwrap(), "--validate"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("weights sum to 3/4"));
}

#[test]
fn malformed_grid_is_usage_error() {
    let out = exreg(&["verify", "--suite", "worked", "--grid", "floor-q-max"]);
    assert_eq!(out.status.code(), Some(2));
    let out = exreg(&["verify", "--suite", "nosuch"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_small_suites_pass() {
    for suite in ["worked", "constants", "duality"] {
        let out = exreg(&["verify", "--suite", suite]);
        assert_eq!(out.status.code(), Some(0), "{suite}: {}", stdout(&out));
    }
    let out = exreg(&["verify", "--suite", "floor", "--grid", "floor-q-max=16,floor-r-max=100"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
}

#[test]
fn scan_is_deterministic() {
    let args = ["scan", "--family", "2F4", "--q-max", "512", "--r-max", "300", "--check-floor", "--format", "csv"];
    let a = exreg(&args);
    let b = Command::new(env!("CARGO_BIN_EXE_exreg"))
        .args(args)
        .env("EXREG_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(!stdout(&a).contains(",false\n"));
}

#[test]
fn verify_json_is_reproducible() {
    let args = ["verify", "--suite", "structural", "--format", "json"];
    assert_eq!(exreg(&args).stdout, exreg(&args).stdout);
}
