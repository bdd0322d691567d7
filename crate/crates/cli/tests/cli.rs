//! End-to-end tests driving the built binary: exit codes, report formats,
//! determinism, and the spec-library override.

use std::path::PathBuf;
use std::process::{Command, Output};

fn ennea(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ennea"))
        .args(args)
        .env_remove("ENNEA_SPEC_LIB")
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

#[test]
fn castelnuovo_subcommand() {
    let out = ennea(&["castelnuovo", "9", "5"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("g <= 7"));

    let out = ennea(&["castelnuovo", "9", "4"]);
    assert!(stdout(&out).contains("g <= 12"));

    let out = ennea(&["castelnuovo", "9", "2"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn table_lists_exactly_the_seven_failing_rows() {
    let out = ennea(&["classify", "--table"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.matches("NOT projectively normal").count(), 7);
    assert!(text.contains("not projectively normal (7)"));
    assert!(text.contains("undetermined (3)"));
    // the removed genus-5 trigonal candidate never appears
    assert!(!text.contains("12-point blow-up of the first Hirzebruch"));
}

#[test]
fn table_output_is_byte_deterministic() {
    let first = ennea(&["classify", "--table", "--json"]);
    let second = ennea(&["classify", "--table", "--json"]);
    assert_eq!(first.stdout, second.stdout);
    let value: serde_json::Value = serde_json::from_slice(&first.stdout).expect("valid JSON");
    assert_eq!(value["rows"].as_array().unwrap().len(), 25);
}

#[test]
fn classify_exit_codes_distinguish_outcomes() {
    let normal = ennea(&["classify", "--case", "p5-g6"]);
    assert_eq!(normal.status.code(), Some(0));

    let failing = ennea(&["classify", "--case", "p4-g6-rational"]);
    assert_eq!(failing.status.code(), Some(0));
    assert!(stdout(&failing).contains("NOT projectively normal"));

    let open = ennea(&["classify", "--case", "scroll-g5-trigonal"]);
    assert_eq!(open.status.code(), Some(2));

    let missing = ennea(&["classify", "--case", "no-such-surface"]);
    assert_eq!(missing.status.code(), Some(1));
}

#[test]
fn classify_reads_profile_documents() {
    let dir = std::env::temp_dir();
    let path = dir.join(format!("ennea-profile-{}.json", std::process::id()));
    std::fs::write(
        &path,
        r#"{
            "ambient": 4, "degree": 9, "genus": 10,
            "chi": 6, "h0_polarization": 5,
            "structure": ["complete-intersection"]
        }"#,
    )
    .unwrap();
    let out = ennea(&["classify", "--profile", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(
        out.status.code(),
        Some(0),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert!(stdout(&out).contains("projectively normal"));
}

#[test]
fn classify_reads_scroll_documents() {
    let dir = std::env::temp_dir();
    let path = dir.join(format!("ennea-scroll-{}.json", std::process::id()));
    std::fs::write(
        &path,
        r#"{"scroll": {"base_genus": 2, "rank": 2, "degree": 9}}"#,
    )
    .unwrap();
    let out = ennea(&["classify", "--profile", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(
        out.status.code(),
        Some(0),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert!(stdout(&out).contains("projectively normal"));
}

#[test]
fn curves_reports_published_and_flagged_classes() {
    let out = ennea(&[
        "curves",
        "--case",
        "p5-g4-elliptic-blowup-em1",
        "--degree",
        "1",
        "--genus",
        "0",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("(6 found)"));
    assert_eq!(text.matches("[published]").count(), 6);

    let out = ennea(&[
        "curves",
        "--case",
        "p5-g4-elliptic-blowup-em1",
        "--degree",
        "3",
        "--genus",
        "1",
        "--min-self",
        "0",
    ]);
    let text = stdout(&out);
    assert_eq!(text.matches("[published]").count(), 1);
    assert_eq!(text.matches("[extra (flagged)]").count(), 3);
}

#[test]
fn curves_reads_spec_documents() {
    let dir = std::env::temp_dir();
    let path = dir.join(format!("ennea-spec-{}.json", std::process::id()));
    std::fs::write(
        &path,
        r#"{
            "surface": {"base": {"kind": "ruled", "q": 1, "e": -1}, "blowups": 3},
            "polarization": [2, 2, -1, -1, -1]
        }"#,
    )
    .unwrap();
    let out = ennea(&[
        "curves",
        "--spec",
        path.to_str().unwrap(),
        "--degree",
        "4",
        "--genus",
        "1",
        "--min-self",
        "0",
        "--json",
    ]);
    std::fs::remove_file(&path).ok();
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["classes"].as_array().unwrap().len(), 4);
}

#[test]
fn invariants_subcommand_reports_the_dossier() {
    let out = ennea(&[
        "invariants",
        "--case",
        "p5-g4-elliptic-blowup-e0",
        "--class",
        "0,1,-1,0,0",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("degree            d = 9"));
    assert!(text.contains("sectional genus   g = 4"));
    assert!(text.contains("delta genus         = 5"));
    assert!(text.contains("p_a = 0"));
}

#[test]
fn cone_check_enumerations() {
    let out = ennea(&[
        "cone-check",
        "--rank",
        "4",
        "--degree",
        "9",
        "--vertex",
        "contains-line",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("alpha = 3, beta+gamma = 2, delta = 1"));

    let out = ennea(&[
        "cone-check",
        "--rank",
        "4",
        "--degree",
        "9",
        "--vertex",
        "meets",
        "--json",
    ]);
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let pairs: Vec<(i64, i64)> = value["tuples"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| {
            (
                t["alpha"].as_i64().unwrap(),
                t["beta_like"].as_i64().unwrap(),
            )
        })
        .collect();
    assert_eq!(pairs, vec![(2, 5), (3, 3), (4, 1)]);

    let out = ennea(&[
        "cone-check",
        "--rank",
        "5",
        "--degree",
        "9",
        "--vertex",
        "disjoint",
    ]);
    assert!(stdout(&out).contains("0 admissible tuple(s)"));

    let out = ennea(&[
        "cone-check",
        "--rank",
        "5",
        "--degree",
        "9",
        "--vertex",
        "on-surface",
        "--surface",
        "case2",
    ]);
    assert!(stdout(&out).contains("residual (vertex blow-up data): 4"));
}

#[test]
fn spec_library_override() {
    let entries = ennea::catalog::entries();
    let subset: Vec<_> = entries.into_iter().filter(|e| e.key == "p5-g6").collect();
    let dir = std::env::temp_dir();
    let path: PathBuf = dir.join(format!("ennea-lib-{}.json", std::process::id()));
    std::fs::write(&path, serde_json::to_string(&subset).unwrap()).unwrap();

    let out = Command::new(env!("CARGO_BIN_EXE_ennea"))
        .args(["classify", "--table"])
        .env("ENNEA_SPEC_LIB", &path)
        .output()
        .unwrap();
    std::fs::remove_file(&path).ok();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("not projectively normal (0)"));
    assert!(text.contains("sectional genus 6"));
}

#[test]
fn bad_input_exits_one() {
    let out = ennea(&[
        "curves",
        "--case",
        "p5-g4-elliptic-blowup-em1",
        "--degree",
        "40",
        "--genus",
        "0",
    ]);
    assert_eq!(out.status.code(), Some(1));

    let out = ennea(&[
        "cone-check",
        "--rank",
        "3",
        "--degree",
        "9",
        "--vertex",
        "disjoint",
    ]);
    assert_eq!(out.status.code(), Some(1));

    let out = ennea(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(1));
}
