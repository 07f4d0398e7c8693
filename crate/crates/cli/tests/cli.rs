//! End-to-end command tests, including the golden reproductions of the
//! published tables and the small certificate.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn flatcert(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_flatcert"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write_temp(dir: &tempfile::TempDir, name: &str, content: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, content).unwrap();
    path
}

fn golden_path(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

/// Volatile-free comparison of two JSON values.
fn canonical(value: &serde_json::Value) -> serde_json::Value {
    let mut v = value.clone();
    if let serde_json::Value::Object(map) = &mut v {
        map.remove("manifest");
        map.remove("timings");
    }
    v
}

#[test]
fn gb_compute_and_check_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_temp(
        &dir,
        "cubic.json",
        r#"{"variables": ["x", "y", "z"], "field": "Q",
            "generators": ["x^2 - y", "x^3 - z"]}"#,
    );
    let out_path = dir.path().join("basis.json");
    let out = flatcert(&[
        "gb",
        "compute",
        "--in",
        input.to_str().unwrap(),
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let basis: serde_json::Value =
        serde_json::from_slice(&std::fs::read(&out_path).unwrap()).unwrap();
    let elements: Vec<&str> =
        basis["elements"].as_array().unwrap().iter().map(|e| e.as_str().unwrap()).collect();
    assert_eq!(elements, vec!["x^2 - y", "x*y - z", "x*z - y^2", "y^3 - z^2"]);

    // The emitted basis file passes its own check.
    let check = flatcert(&["gb", "check", "--in", out_path.to_str().unwrap()]);
    assert!(check.status.success());
}

#[test]
fn empty_input_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_temp(
        &dir,
        "empty.json",
        r#"{"variables": ["x"], "field": "Q", "generators": []}"#,
    );
    let out = flatcert(&["gb", "compute", "--in", input.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn ideal_quotient_and_equal() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_temp(
        &dir,
        "ideal.json",
        r#"{"variables": ["x", "y"], "field": "Q", "generators": ["x*y", "y^2"]}"#,
    );
    let quot_path = dir.path().join("quot.json");
    let out = flatcert(&[
        "ideal",
        "quotient",
        "--in",
        input.to_str().unwrap(),
        "--by",
        "y",
        "--out",
        quot_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let expected = write_temp(
        &dir,
        "expected.json",
        r#"{"variables": ["x", "y"], "field": "Q", "generators": ["x", "y"]}"#,
    );
    let eq = flatcert(&[
        "ideal",
        "equal",
        "--a",
        quot_path.to_str().unwrap(),
        "--b",
        expected.to_str().unwrap(),
    ]);
    assert!(eq.status.success());
}

#[test]
fn elimination_reads_off_the_tail() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_temp(
        &dir,
        "ideal.json",
        r#"{"variables": ["x", "y"], "field": "Q", "generators": ["x - y", "y^2"]}"#,
    );
    let out = flatcert(&["ideal", "eliminate", "--in", input.to_str().unwrap(), "--keep-from", "y"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let elements: Vec<&str> =
        value["elements"].as_array().unwrap().iter().map(|e| e.as_str().unwrap()).collect();
    assert_eq!(elements, vec!["y^2"]);
}

#[test]
fn table_contains_the_published_newton_row() {
    let out = flatcert(&["weyl", "table", "--preset", "gu24-split"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let rows = value["rows"].as_array().unwrap();
    // s3 s2 s1 s0 s2 (canonical word s3s2s0s1s2) has Newton point (1,0,0).
    let row = rows
        .iter()
        .find(|r| r["word"] == serde_json::json!([3, 2, 0, 1, 2]))
        .expect("row present");
    assert_eq!(row["newton"], "(1, 0, 0)");
    assert_eq!(row["straight"], true);
    assert_eq!(row["empty"], true);
}

#[test]
fn diff_split_vs_nonsplit_flags_the_divergent_row() {
    let dir = tempfile::tempdir().unwrap();
    let split = dir.path().join("split.json");
    let nonsplit = dir.path().join("nonsplit.json");
    assert!(flatcert(&["weyl", "table", "--preset", "gu24-split", "--out", split.to_str().unwrap()])
        .status
        .success());
    assert!(flatcert(&[
        "weyl",
        "table",
        "--preset",
        "gu24-nonsplit",
        "--out",
        nonsplit.to_str().unwrap()
    ])
    .status
    .success());

    // A table diffs empty against itself.
    let same = flatcert(&["report", "diff", "--a", split.to_str().unwrap(), "--b", split.to_str().unwrap()]);
    assert!(same.status.success());
    let value: serde_json::Value = serde_json::from_slice(&same.stdout).unwrap();
    assert_eq!(value["identical"], true);

    // Against the other action the Newton column differs on the divergent
    // element s3 s2 s3 s1 s0 s2 s0 (canonical word s3s2s0s1s3s2s0).
    let cross = flatcert(&[
        "report",
        "diff",
        "--a",
        split.to_str().unwrap(),
        "--b",
        nonsplit.to_str().unwrap(),
    ]);
    assert_eq!(cross.status.code(), Some(1));
    let value: serde_json::Value = serde_json::from_slice(&cross.stdout).unwrap();
    assert_eq!(value["identical"], false);
    let split_table: serde_json::Value =
        serde_json::from_slice(&std::fs::read(&split).unwrap()).unwrap();
    let idx = split_table["rows"]
        .as_array()
        .unwrap()
        .iter()
        .position(|r| r["word"] == serde_json::json!([3, 2, 0, 1, 3, 2, 0]))
        .expect("divergent element present");
    let newton_path = format!("$.rows[{idx}].newton");
    let diffs = value["differences"].as_array().unwrap();
    let entry = diffs
        .iter()
        .find(|d| d["path"] == serde_json::json!(newton_path))
        .expect("newton difference present");
    assert_eq!(entry["left"], "(1, 1/2, 1/2)");
    assert_eq!(entry["right"], "(1, 0, 0)");
}

#[test]
fn golden_tables_are_reproduced() {
    for preset in ["gu24-split", "gu24-nonsplit"] {
        let out = flatcert(&["weyl", "table", "--preset", preset]);
        assert!(out.status.success());
        let fresh: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        let golden: serde_json::Value = serde_json::from_slice(
            &std::fs::read(golden_path(&format!("{preset}.json"))).unwrap(),
        )
        .unwrap();
        assert_eq!(canonical(&fresh), canonical(&golden), "golden drift in {preset}");
    }
}

#[test]
fn golden_certificate_is_reproduced() {
    let out = flatcert(&["flatness", "run", "--s", "2", "--n", "4"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let fresh: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let golden: serde_json::Value =
        serde_json::from_slice(&std::fs::read(golden_path("j24-certificate.json")).unwrap())
            .unwrap();
    assert_eq!(canonical(&fresh), canonical(&golden), "golden drift in the certificate");
}

#[test]
fn flatness_handles_the_degenerate_square_matrix() {
    // s = n = 2: no minors exist, yet the chain still closes.
    let out = flatcert(&["flatness", "run", "--s", "2", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(value["excluded_primes"].as_array().unwrap().contains(&serde_json::json!(2)));
}

#[test]
fn flatness_resource_limit_is_inconclusive() {
    let out = flatcert(&["flatness", "run", "--s", "2", "--n", "4", "--max-steps", "1"]);
    assert_eq!(out.status.code(), Some(3));
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["verdict"]["kind"], "inconclusive");
}

#[test]
fn reduce_text_render_shows_the_chain() {
    let out = flatcert(&[
        "weyl",
        "reduce",
        "--word",
        "3,2,3,1,2,0",
        "--sigma",
        "nonsplit",
        "--side",
        "right",
        "--format",
        "text",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("conjugate by s1"));
    assert!(text.contains("conjugate by s3"));
    assert!(text.contains("split at s2"));
    assert!(text.contains("leaf s1s2"));
}
