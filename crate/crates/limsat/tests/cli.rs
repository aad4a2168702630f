//! End-to-end checks of the `limsat` binary: exit codes, output shape,
//! and determinism of repeated runs.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use limsat::gen;

fn limsat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_limsat"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write_demo(dir: &Path) -> String {
    let path = dir.join("demo.cnf");
    fs::write(&path, gen::demo_formula().to_dimacs()).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn solve_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let demo = write_demo(dir.path());
    let out = limsat(&["solve", &demo]);
    assert_eq!(out.status.code(), Some(10));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("SAT\nv "));

    let contra = dir.path().join("contra.cnf");
    fs::write(&contra, "p cnf 1 2\n1 0\n-1 0\n").unwrap();
    let out = limsat(&["solve", contra.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(20));

    let bad = dir.path().join("bad.cnf");
    fs::write(&bad, "no header here\n").unwrap();
    let out = limsat(&["solve", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn solve_timeout_exit_code() {
    // large enough that the solver cannot finish between timeout checks
    let dir = tempfile::tempdir().unwrap();
    let php = dir.path().join("php.cnf");
    fs::write(&php, gen::pigeonhole(9, 8).to_dimacs()).unwrap();
    let out = limsat(&["solve", php.to_str().unwrap(), "--timeout", "0.001"]);
    assert_eq!(out.status.code(), Some(30));
    assert!(String::from_utf8(out.stdout).unwrap().contains("TIMEOUT"));
}

#[test]
fn convert_and_reimport() {
    let dir = tempfile::tempdir().unwrap();
    let demo = write_demo(dir.path());
    let lp_path = dir.path().join("demo.lp");
    let out = limsat(&["convert", &demo, "--format", "lp", "-o", lp_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let lp = fs::read_to_string(&lp_path).unwrap();
    let model = limsat::ilp::import_lp(&lp).unwrap();
    assert_eq!(model.constraints.len(), 7);

    let out = limsat(&["convert", &demo, "--format", "mps"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().contains("ENDATA"));
}

#[test]
fn oracle_and_solve_agree() {
    let dir = tempfile::tempdir().unwrap();
    for seed in 0..6u64 {
        let f = gen::random_3cnf(7, 30, seed);
        let path = dir.path().join(format!("r{seed}.cnf"));
        fs::write(&path, f.to_dimacs()).unwrap();
        let p = path.to_str().unwrap();
        let solve = limsat(&["solve", p]).status.code();
        let oracle = limsat(&["oracle", p]).status.code();
        assert_eq!(solve, oracle, "seed {seed}");
    }
}

#[test]
fn ssp_subcommand_prints_table() {
    let dir = tempfile::tempdir().unwrap();
    let demo = write_demo(dir.path());
    let out = limsat(&["ssp", &demo, "--dp"]);
    assert_eq!(out.status.code(), Some(10));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("X1 X2 X3 C1 C2 C3 C4"));
    assert!(text.contains("subset:"));
}

#[test]
fn bench_csv_runs_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    for seed in 0..5u64 {
        let f = gen::planted_3cnf(12, 51, seed);
        fs::write(dir.path().join(format!("f{seed}.cnf")), f.to_dimacs()).unwrap();
    }
    let strip_times = |stdout: Vec<u8>| -> Vec<String> {
        String::from_utf8(stdout)
            .unwrap()
            .lines()
            .map(|l| l.rsplit_once(',').map_or(l.to_string(), |(head, _)| head.to_string()))
            .collect()
    };
    let a = limsat(&["bench", dir.path().to_str().unwrap(), "--workers", "1"]);
    let b = limsat(&["bench", dir.path().to_str().unwrap(), "--workers", "1"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(strip_times(a.stdout), strip_times(b.stdout));
}
