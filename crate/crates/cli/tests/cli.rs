use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

const SET_I: &str = "# quartic benchmark\nn = 2\nl = 1\nc = -1.0\na3 = 0.5\na4 = 0.1\n";

fn ces(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ces"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn csv_rows(text: &str) -> Vec<Vec<String>> {
    text.lines()
        .skip(1)
        .map(|l| l.split(',').map(String::from).collect())
        .collect()
}

#[test]
fn solve_reports_constraint_values() {
    let dir = TempDir::new().unwrap();
    let cfg = write(&dir, "set1.cfg", SET_I);
    let out = ces(&["solve", "--config", s(&cfg)]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("-1.502082"), "{text}");
    assert!(text.contains("0.783114"));
    assert!(text.contains("3.890347"));
    assert!(text.contains("psi0(r) ="));
}

#[test]
fn solve_oscillator() {
    let dir = TempDir::new().unwrap();
    let cfg = write(&dir, "osc.cfg", "n = 1\nl = 0\nc = 0\na2 = 1\n");
    let out = ces(&["solve", "--config", s(&cfg), "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let rows = csv_rows(&stdout(&out));
    let get = |q: &str| rows.iter().find(|r| r[0] == q).unwrap().clone();
    assert_eq!(get("a1")[2], "0");
    assert_eq!(get("E0")[1], "3");
}

#[test]
fn violated_constraints_exit_2_with_report() {
    let dir = TempDir::new().unwrap();
    let cfg = write(&dir, "bad.cfg", &format!("{SET_I}a2 = 0.9\n"));
    let out = ces(&["solve", "--config", s(&cfg), "--format", "csv"]);
    assert_eq!(out.status.code(), Some(2));
    let rows = csv_rows(&stdout(&out));
    let a2 = rows.iter().find(|r| r[0] == "a2").unwrap();
    let residual: f64 = a2[3].parse().unwrap();
    assert!((residual - (0.9 - 0.783113883)).abs() < 1e-8);

    let out = ces(&["hierarchy", "--config", s(&cfg)]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn malformed_config_exits_1_with_position() {
    let dir = TempDir::new().unwrap();
    let cfg = write(
        &dir,
        "typo.cfg",
        "n = 2\nl = 1\nc = -1.0\n a3 = 0.5\na4 = 0.1\ncc = 3\n",
    );
    let out = ces(&["solve", "--config", s(&cfg)]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 6, column 1: unknown key `cc`"), "{err}");

    let cfg = write(&dir, "value.cfg", "n = 2\nl = 1\nc = minus one\n");
    let err = String::from_utf8(ces(&["solve", "--config", s(&cfg)]).stderr).unwrap();
    assert!(err.contains("line 3, column 5"), "{err}");

    let missing = dir.path().join("absent.cfg");
    assert_eq!(
        ces(&["solve", "--config", s(&missing)]).status.code(),
        Some(1)
    );
}

#[test]
fn hierarchy_rows_and_numeric_column() {
    let dir = TempDir::new().unwrap();
    let cfg = write(&dir, "set1.cfg", SET_I);
    let out = ces(&[
        "hierarchy",
        "--config",
        s(&cfg),
        "--depth",
        "0",
        "--format",
        "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(csv_rows(&stdout(&out)).len(), 1);

    let out = ces(&[
        "hierarchy",
        "--config",
        s(&cfg),
        "--numeric",
        "--format",
        "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("k,l,a1,a2,E_analytic,E_numeric,drift_a1,drift_a2\n"));
    for row in csv_rows(&text) {
        let analytic: f64 = row[4].parse().unwrap();
        let numeric: f64 = row[5].parse().unwrap();
        assert!((analytic - numeric).abs() < 1e-4);
    }
}

#[test]
fn shoot_bare_coulomb_and_wavefunctions() {
    let dir = TempDir::new().unwrap();
    let cfg = write(&dir, "coulomb.cfg", "n = 0\nl = 0\nc = -2\n");
    let wf = dir.path().join("psi.csv");
    let out = ces(&[
        "shoot",
        "--config",
        s(&cfg),
        "--states",
        "2",
        "--wf-out",
        s(&wf),
        "--format",
        "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let rows = csv_rows(&stdout(&out));
    let energies: Vec<f64> = rows.iter().map(|r| r[1].parse().unwrap()).collect();
    assert!((energies[0] + 1.0).abs() <= 1e-4);
    assert!((energies[1] + 0.25).abs() <= 1e-4);
    for k in 0..2 {
        let text = std::fs::read_to_string(dir.path().join(format!("psi_{k}.csv"))).unwrap();
        assert!(text.starts_with("r,u\n"));
        assert!(text.lines().count() > 100);
    }
}

#[test]
fn zero_states_is_a_usage_error() {
    let dir = TempDir::new().unwrap();
    let cfg = write(&dir, "set1.cfg", SET_I);
    assert_eq!(
        ces(&["shoot", "--config", s(&cfg), "--states", "0"])
            .status
            .code(),
        Some(1)
    );
    let cfg = write(&dir, "zero.cfg", &format!("{SET_I}states = 0\n"));
    assert_eq!(ces(&["shoot", "--config", s(&cfg)]).status.code(), Some(1));
}

#[test]
fn reproduce_table_ids() {
    let out = ces(&["reproduce", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("PASS: all 12 entries match"));

    assert_eq!(ces(&["reproduce", "3"]).status.code(), Some(1));

    let out = ces(&["reproduce", "2"]);
    let text = stdout(&out);
    assert_eq!(text.lines().filter(|l| l.starts_with("SET")).count(), 18);
    let passed = text.contains("PASS:");
    assert_eq!(out.status.code(), Some(if passed { 0 } else { 4 }));
}

#[test]
fn dump_config_round_trips() {
    let dir = TempDir::new().unwrap();
    let cfg = write(
        &dir,
        "full.cfg",
        "n = 2\nl = 1\nc = -0.1\na1 = -1.559\n# comment\na3 = 0.3\na4 = 0.07  # trailing\nshift = 0.125\nstep = 0.0005\ne_lo = -1\n",
    );
    let first = ces(&[
        "hierarchy",
        "--config",
        s(&cfg),
        "--depth",
        "3",
        "--dump-config",
    ]);
    assert_eq!(first.status.code(), Some(0));
    let dumped = write(&dir, "dumped.cfg", &stdout(&first));
    let second = ces(&["hierarchy", "--config", s(&dumped), "--dump-config"]);
    assert_eq!(stdout(&first), stdout(&second));
    assert!(stdout(&first).contains("depth = 3\n"));
}

#[test]
fn csv_output_is_byte_identical_across_runs() {
    let dir = TempDir::new().unwrap();
    let cfg = write(&dir, "set1.cfg", SET_I);
    for args in [
        vec!["shoot", "--config", s(&cfg), "--format", "csv"],
        vec![
            "hierarchy",
            "--config",
            s(&cfg),
            "--numeric",
            "--format",
            "csv",
        ],
        vec!["solve", "--config", s(&cfg), "--format", "csv"],
    ] {
        let a = ces(&args).stdout;
        let b = ces(&args).stdout;
        assert!(!a.is_empty());
        assert_eq!(a, b);
    }
}

#[test]
fn out_flag_writes_file() {
    let dir = TempDir::new().unwrap();
    let cfg = write(&dir, "set1.cfg", SET_I);
    let target = dir.path().join("levels.csv");
    let out = ces(&[
        "shoot",
        "--config",
        s(&cfg),
        "--states",
        "1",
        "--format",
        "csv",
        "--out",
        s(&target),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(target).unwrap();
    assert!(text.starts_with("state,energy,nodes,converged,iterations\n0,3.89034"));
}
