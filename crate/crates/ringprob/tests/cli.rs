//! End-to-end tests of the `ringprob` binary: subcommands, output
//! formats, exit codes (0 pass / 2 assertion / 3 malformed / 4 cap), and
//! the ring file interface.

use ringprob::catalog::{build_family, save_ring, FamilySpec};
use std::path::Path;
use std::process::Command;

fn exe() -> &'static str {
    env!("CARGO_BIN_EXE_ringprob")
}

fn write_ring(dir: &Path, spec: &FamilySpec) -> std::path::PathBuf {
    let ring = build_family(spec).unwrap();
    let path = dir.join(format!("{}.json", spec.label()));
    save_ring(&ring, &path).unwrap();
    path
}

#[test]
fn info_reports_probabilities_in_text_and_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_ring(dir.path(), &FamilySpec::Cyclic(4));
    let out = Command::new(exe())
        .args(["info", path.to_str().unwrap()])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("zp          1/2"), "missing zp: {text}");
    assert!(text.contains("cp          1/1"), "missing cp: {text}");

    let out = Command::new(exe())
        .args(["info", path.to_str().unwrap(), "--format", "json"])
        .output()
        .unwrap();
    let js: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(js["zp"]["num"], "1");
    assert_eq!(js["zp"]["den"], "2");
    assert_eq!(js["commutative"], true);
}

#[test]
fn extract_writes_valid_report_and_exit_zero() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_ring(dir.path(), &FamilySpec::Matrix2(2));
    for mode in ["cp", "zp"] {
        let outfile = dir.path().join(format!("report_{mode}.json"));
        let out = Command::new(exe())
            .args([
                "extract",
                path.to_str().unwrap(),
                "--mode",
                mode,
                "--out",
                outfile.to_str().unwrap(),
            ])
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(0), "mode {mode}");
        let js: serde_json::Value =
            serde_json::from_str(&std::fs::read_to_string(&outfile).unwrap()).unwrap();
        assert_eq!(js["valid"], true);
        assert_eq!(js["schema_version"], 1);
        assert_eq!(js["mode"], mode);
    }
}

#[test]
fn verify_suites_pass_on_well_behaved_rings() {
    let dir = tempfile::tempdir().unwrap();
    let t2 = write_ring(dir.path(), &FamilySpec::UpperTriangular2(2));
    for suite in ["thm1", "thm3", "prop21", "prop31", "lemma32", "converse", "eberhard"] {
        let out = Command::new(exe())
            .args(["verify", t2.to_str().unwrap(), "--suite", suite])
            .output()
            .unwrap();
        assert_eq!(
            out.status.code(),
            Some(0),
            "suite {suite}: {}",
            String::from_utf8_lossy(&out.stdout)
        );
        let js: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(js["pass"], true, "suite {suite}");
    }
}

#[test]
fn malformed_input_exits_three() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, "{\"name\": \"broken\"").unwrap();
    let out = Command::new(exe())
        .args(["info", path.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));

    // Structurally invalid ring (nonassociative table).
    let bad = serde_json::json!({
        "name": "bad",
        "flavor": "associative",
        "orders": [2, 2],
        "table": [[[0,1],[1,0]],[[0,0],[1,0]]]
    });
    let path2 = dir.path().join("bad2.json");
    std::fs::write(&path2, bad.to_string()).unwrap();
    let out2 = Command::new(exe())
        .args(["info", path2.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out2.status.code(), Some(3));

    // Unknown flag is usage error: also malformed input.
    let out3 = Command::new(exe()).args(["info", "--bogus"]).output().unwrap();
    assert_eq!(out3.status.code(), Some(3));
}

#[test]
fn failed_proof_step_exits_two() {
    // x·y = y₁·x on Z_2³: every right annihilator has index ≤ 2, yet
    // [R : {x : x·bᵢ = 0}] = 8 > n^n = 4 — the square construction's
    // transversal bound genuinely fails here, and the CLI must report it
    // honestly with exit code 2.
    let dir = tempfile::tempdir().unwrap();
    let file = serde_json::json!({
        "name": "column8",
        "flavor": "associative",
        "orders": [2, 2, 2],
        "table": [
            [[1,0,0],[0,0,0],[0,0,0]],
            [[0,1,0],[0,0,0],[0,0,0]],
            [[0,0,1],[0,0,0],[0,0,0]]
        ]
    });
    let path = dir.path().join("column8.json");
    std::fs::write(&path, file.to_string()).unwrap();
    let out = Command::new(exe())
        .args(["verify", path.to_str().unwrap(), "--suite", "prop31"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let js: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(js["pass"], false);
    let detail = js["detail"].to_string();
    assert!(detail.contains("index_s_at_most_n_to_the_n"), "{detail}");

    // The same ring still passes the extraction suites: the zp pipeline
    // and its descent are sound on it.
    for suite in ["thm1", "thm3", "lemma32"] {
        let ok = Command::new(exe())
            .args(["verify", path.to_str().unwrap(), "--suite", suite])
            .output()
            .unwrap();
        assert_eq!(ok.status.code(), Some(0), "suite {suite}");
    }
}

#[test]
fn cap_exceeded_exits_four() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_ring(dir.path(), &FamilySpec::Matrix2(2));
    let out = Command::new(exe())
        .args(["info", path.to_str().unwrap(), "--max-order", "8"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(4));

    // Oracle cap: |R| > 256.
    let big = write_ring(dir.path(), &FamilySpec::ZeroRing(512));
    let out2 = Command::new(exe())
        .args(["oracle", big.to_str().unwrap(), "--mode", "zp"])
        .output()
        .unwrap();
    assert_eq!(out2.status.code(), Some(4));
}

#[test]
fn scan_emits_versioned_csv() {
    let dir = tempfile::tempdir().unwrap();
    let outfile = dir.path().join("scan.csv");
    let out = Command::new(exe())
        .args([
            "scan",
            "--family",
            "zero",
            "--params",
            "2..=8",
            "--mode",
            "zp",
            "--out",
            outfile.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&outfile).unwrap();
    assert!(text.starts_with("# ringprob scan v1\n"));
    let rows: Vec<&str> = text.lines().skip(2).collect();
    assert_eq!(rows.len(), 7); // params 2..=8
    // Zero rings: cp = zp = 1, extraction trivial, oracle gap 0.
    for row in rows {
        assert!(row.contains(",1/1,1/1,zp,1,1,1,true,"), "row: {row}");
        assert!(row.ends_with(",1,1,0"), "row: {row}");
    }
}

#[test]
fn enumerate_writes_rings_and_manifest() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().join("census22");
    let out = Command::new(exe())
        .args(["enumerate", "--shape", "2,2", "--out-dir", out_dir.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let manifest = std::fs::read_to_string(out_dir.join("manifest.csv")).unwrap();
    assert!(manifest.starts_with("# ringprob census v1\n"));
    let rows = manifest.lines().skip(2).count();
    assert_eq!(rows, 28);
    // Every emitted ring file loads and validates.
    let mut files: Vec<_> = std::fs::read_dir(&out_dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.file_name().unwrap().to_str().unwrap().starts_with("ring_"))
        .collect();
    files.sort();
    assert_eq!(files.len(), 28);
    for f in files.iter().take(5) {
        ringprob::catalog::load_ring(f).unwrap();
    }
}

#[test]
fn oracle_reports_optimum() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_ring(dir.path(), &FamilySpec::Cyclic(4));
    let out = Command::new(exe())
        .args(["oracle", path.to_str().unwrap(), "--mode", "zp"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let js: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(js["best"]["members"], serde_json::json!([0, 2]));
    assert_eq!(js["best_value"], 2);
}
