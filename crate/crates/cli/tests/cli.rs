use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use std::sync::OnceLock;

use tempfile::TempDir;

fn vpf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vpf")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn build_into(dir: &Path, name: &str, threads: &str) -> (PathBuf, Output) {
    let path = dir.join(name);
    let out = Command::new(env!("CARGO_BIN_EXE_vpf"))
        .args(["build", "--out", path.to_str().unwrap()])
        .env("VPF_THREADS", threads)
        .output()
        .unwrap();
    (path, out)
}

struct Fixture {
    dir: TempDir,
    db: PathBuf,
    build_output: String,
}

fn fixture() -> &'static Fixture {
    static F: OnceLock<Fixture> = OnceLock::new();
    F.get_or_init(|| {
        let dir = TempDir::new().unwrap();
        let (db, out) = build_into(dir.path(), "so5.json", "4");
        assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
        Fixture { build_output: stdout(&out), db, dir }
    })
}

fn db() -> &'static str {
    fixture().db.to_str().unwrap()
}

#[test]
fn build_reports_counts() {
    let out = &fixture().build_output;
    assert!(out.contains("maximal cones: 320"), "{out}");
    assert!(out.contains("intersections: 43"), "{out}");
    assert!(out.contains("glued chambers: 33"), "{out}");
}

#[test]
fn build_is_deterministic_across_thread_counts() {
    let (again, out) = build_into(fixture().dir.path(), "single.json", "1");
    assert!(out.status.success());
    assert_eq!(std::fs::read(&again).unwrap(), std::fs::read(&fixture().db).unwrap());
}

#[test]
fn multiplicities() {
    for (lambda, beta, want) in [("4,8", "3,2", "5"), ("4,8", "4,2", "6"), ("0,0", "0,0", "1")] {
        let o = vpf(&["mult", "--db", db(), "--lambda", lambda, "--beta", beta, "--verify"]);
        assert!(o.status.success());
        let text = stdout(&o);
        assert_eq!(text.split_whitespace().next(), Some(want), "{text}");
        assert!(text.contains(&format!("brute_force={want}")));
    }
}

#[test]
fn characters() {
    let vector = stdout(&vpf(&["character", "--db", db(), "--lambda", "0,1"]));
    assert!(vector.ends_with("total = 5\n"), "{vector}");
    assert_eq!(vector.lines().count(), 6);
    let spin = stdout(&vpf(&["character", "--db", db(), "--lambda", "1,0"]));
    assert!(spin.ends_with("total = 4\n"));
    let big = stdout(&vpf(&["character", "--db", db(), "--lambda", "4,8"]));
    assert!(big.lines().any(|l| l == "4 4 9"));
    assert!(big.ends_with("total = 2415\n"));
    let csv = stdout(&vpf(&["character", "--db", db(), "--lambda", "4,8", "--format", "csv"]));
    assert!(csv.starts_with("b1,b2,multiplicity\n") && csv.lines().any(|l| l == "4,4,9"));
}

#[test]
fn chamber_listings() {
    let f5 = stdout(&vpf(&["chambers", "--db", db(), "--poly", "5"]));
    assert_eq!(f5, "1 + 3/2*b2 + 1/2*b2^2\n");
    let f12 = stdout(&vpf(&["chambers", "--db", db(), "--poly", "12"]));
    let mut terms: Vec<&str> = f12.trim().split(" + ").flat_map(|t| t.split(" - ")).collect();
    terms.sort();
    assert_eq!(terms, ["1", "1/2*l2", "1/2*l2^2", "b2", "l2*b2"]);
    assert!(f12.contains("- 1/2*l2^2"));

    let all = stdout(&vpf(&["chambers", "--db", db()]));
    assert_eq!(all.lines().count(), 33);
    assert!(all.starts_with("chamber 1: "));

    let slices = stdout(&vpf(&["chambers", "--db", db(), "--lambda", "1,2"]));
    assert!(slices.lines().count() > 1 && slices.lines().all(|l| l.starts_with("chamber ")));

    let missing = vpf(&["chambers", "--db", db(), "--poly", "99"]);
    assert_eq!(missing.status.code(), Some(1));
}

#[test]
fn selftest_passes() {
    for k in ["0", "8"] {
        let o = vpf(&["selftest", "--db", db(), "--max-lambda", k]);
        assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
        assert!(stdout(&o).ends_with("selftest passed\n"));
    }
}

#[test]
fn corrupted_database_is_rejected() {
    let dir = TempDir::new().unwrap();
    let bad = dir.path().join("bad.json");
    let text = std::fs::read_to_string(&fixture().db).unwrap();
    std::fs::write(&bad, text.replacen("\"1/2\"", "\"1/3\"", 1)).unwrap();
    for args in [
        vec!["selftest", "--db", bad.to_str().unwrap(), "--max-lambda", "2"],
        vec!["mult", "--db", bad.to_str().unwrap(), "--lambda", "1,1", "--beta", "0,0"],
    ] {
        let o = vpf(&args);
        assert_eq!(o.status.code(), Some(1));
        assert!(String::from_utf8_lossy(&o.stderr).contains("corrupt database"));
    }
}

#[test]
fn user_errors_exit_with_one() {
    assert_eq!(vpf(&["mult", "--db", db(), "--lambda", "4", "--beta", "1,1"]).status.code(), Some(1));
    assert_eq!(vpf(&["mult", "--db", "/nonexistent", "--lambda", "1,1", "--beta", "1,1"]).status.code(), Some(1));
    assert_eq!(vpf(&["frobnicate"]).status.code(), Some(1));
}

#[test]
fn generic_matrix_build() {
    let dir = TempDir::new().unwrap();
    let m = dir.path().join("m.txt");
    std::fs::write(&m, "# two coins\n1 1\n").unwrap();
    let out = dir.path().join("m.json");
    let o = vpf(&["build", "--out", out.to_str().unwrap(), "--matrix", m.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(stdout(&vpf(&["chambers", "--db", out.to_str().unwrap(), "--poly", "1"])), "1 + h1\n");
    assert_eq!(vpf(&["mult", "--db", out.to_str().unwrap(), "--lambda", "1,1", "--beta", "0,0"]).status.code(), Some(1));
}
