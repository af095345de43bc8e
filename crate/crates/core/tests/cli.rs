//! End-to-end tests of the `bicert` binary.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn bicert(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bicert"))
        .args(args)
        .output()
        .expect("failed to run bicert")
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_owned()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn triangle_reports_an_odd_cycle() {
    let dir = TempDir::new().unwrap();
    let file = write(&dir, "tri.txt", "0 1\n1 2\n2 0\n");
    let out = bicert(&["check", &file, "--algo", "dsu"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("verdict: odd_cycle"), "{text}");
    assert!(text.contains("cycle (3): 0 1 2"), "{text}");
}

#[test]
fn square_is_bipartite_in_json() {
    let dir = TempDir::new().unwrap();
    let file = write(&dir, "c4.txt", "0 1\n1 2\n2 3\n3 0\n");
    let out = bicert(&["check", &file, "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let reports: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let reports = reports.as_array().unwrap();
    assert_eq!(reports.len(), 4);
    for r in reports {
        assert_eq!(r["verdict"], "bipartite");
        assert!(r.get("elapsed_ns").is_none());
    }
    let names: Vec<_> = reports
        .iter()
        .map(|r| r["algorithm"].as_str().unwrap())
        .collect();
    assert_eq!(names, ["growth", "flip", "dsu", "forest"]);
}

#[test]
fn timing_flag_adds_elapsed() {
    let dir = TempDir::new().unwrap();
    let file = write(&dir, "e.txt", "0 1\n");
    let out = bicert(&["check", &file, "--algo", "flip", "--json", "--timing"]);
    let reports: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(reports[0]["elapsed_ns"].is_u64());
}

#[test]
fn dot_output_highlights_the_cycle() {
    let dir = TempDir::new().unwrap();
    let file = write(&dir, "tri.txt", "0 1\n1 2\n2 0\n");
    let dot = dir.path().join("out.dot");
    let out = bicert(&[
        "check",
        &file,
        "--algo",
        "growth",
        "--dot",
        dot.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    let text = fs::read_to_string(&dot).unwrap();
    assert!(text.starts_with("graph G {"));
    assert_eq!(text.matches("color=\"#d62728\"").count(), 3);
}

#[test]
fn dimacs_input() {
    let dir = TempDir::new().unwrap();
    let file = write(
        &dir,
        "g.col",
        "c square\np edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n",
    );
    let out = bicert(&["check", &file, "--format", "dimacs"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn bad_input_exits_two() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.txt", "0 1\n1 x\n");
    let out = bicert(&["check", &bad]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));

    let missing = dir.path().join("nope.txt");
    assert_eq!(
        bicert(&["check", missing.to_str().unwrap()]).status.code(),
        Some(2)
    );
    assert_eq!(bicert(&["check"]).status.code(), Some(2));
    assert_eq!(bicert(&["frobnicate"]).status.code(), Some(2));
    let even = bicert(&[
        "gen",
        "--kind",
        "planted-odd-cycle",
        "--left",
        "2",
        "--right",
        "2",
        "--m",
        "2",
        "--cycle-len",
        "4",
    ]);
    assert_eq!(even.status.code(), Some(2));
    assert_eq!(
        bicert(&["bench", "--sizes", "10", "--seeds", "1"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn gen_matches_the_golden_file() {
    let out = bicert(&[
        "gen", "--kind", "random", "--n", "12", "--m", "20", "--seed", "7",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let golden = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden/random_n12_m20_s7.txt");
    assert_eq!(stdout(&out), fs::read_to_string(golden).unwrap());
}

#[test]
fn gen_then_check_round_trip() {
    let dir = TempDir::new().unwrap();
    let out = bicert(&[
        "gen",
        "--kind",
        "planted-bipartite",
        "--left",
        "20",
        "--right",
        "30",
        "--p",
        "0.2",
        "--seed",
        "4",
        "--format",
        "dimacs",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let file = write(&dir, "g.col", &stdout(&out));
    assert_eq!(
        bicert(&["check", &file, "--format", "dimacs"])
            .status
            .code(),
        Some(0)
    );
}

#[test]
fn check_is_byte_reproducible() {
    let dir = TempDir::new().unwrap();
    let gen = bicert(&[
        "gen", "--kind", "random", "--n", "200", "--m", "300", "--seed", "9", "--loops", "--multi",
    ]);
    let file = write(&dir, "g.txt", &stdout(&gen));
    let a = bicert(&["check", &file, "--json"]);
    let b = bicert(&["check", &file, "--json"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.status.code(), b.status.code());
}

#[test]
fn bench_emits_one_row_per_algorithm() {
    let out = bicert(&[
        "bench",
        "--sizes",
        "50:80,100:150",
        "--seeds",
        "1,2",
        "--kinds",
        "random,forest",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("algorithm,kind,n,m,seed,rep,verdict,elapsed_ns,ops_counter")
    );
    let rows: Vec<_> = lines.collect();
    assert_eq!(rows.len(), 2 * 2 * 2 * 4);
    for row in rows {
        assert_eq!(row.split(',').count(), 9);
    }
}
