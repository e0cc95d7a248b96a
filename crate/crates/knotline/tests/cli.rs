use std::path::PathBuf;
use std::process::{Command, Output};

fn data(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(rel)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_knotline"))
        .args(args)
        .env_remove("KNOTLINE_DATA")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn path(rel: &str) -> String {
    data(rel).to_string_lossy().into_owned()
}

#[test]
fn invariant_of_the_unknot() {
    let o = run(&["invariant", "--quiet", &path("corpus/unknot.knot")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "0\n");
}

#[test]
fn invariant_prints_a_derivation() {
    let o = run(&["invariant", &path("corpus/fig1.knot")]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("m = 0"));
    assert!(text.contains("STEP 1:"));
}

#[test]
fn invariant_budget_exhaustion_exits_two() {
    let o = run(&[
        "invariant",
        "--max-expansions",
        "1",
        &path("corpus/fig3.knot"),
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(run(&["table", "frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn missing_file_exits_one() {
    let o = run(&["invariant", "/no/such.knot"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn check_corpus_scripts() {
    for (name, m) in [("fig2b", 1), ("fig4", -4)] {
        let o = run(&[
            "check",
            &path(&format!("corpus/{name}.knot")),
            &path(&format!("scripts/{name}.script")),
        ]);
        assert_eq!(o.status.code(), Some(0), "{name}");
        assert_eq!(stdout(&o).trim(), format!("OK, m = {m}"));
    }
}

#[test]
fn check_reports_the_first_illegal_step() {
    let script = std::fs::read_to_string(data("scripts/fig2b.script")).unwrap();
    // Swap the rules of the first two steps, keeping the step numbers.
    let mut lines: Vec<String> = script.lines().map(str::to_owned).collect();
    let body = |l: &str| l.split_once(": ").unwrap().1.to_owned();
    let (first, second) = (body(&lines[0]), body(&lines[1]));
    lines[0] = format!("STEP 1: {second}");
    lines[1] = format!("STEP 2: {first}");
    let dir = tempfile::tempdir().unwrap();
    let mutated = dir.path().join("swapped.script");
    std::fs::write(&mutated, lines.join("\n")).unwrap();
    let o = run(&[
        "check",
        &path("corpus/fig2b.knot"),
        &mutated.to_string_lossy(),
    ]);
    assert_eq!(o.status.code(), Some(3));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("step ") && err.contains("illegal"), "{err}");
}

#[test]
fn table_build_matches_golden_rows() {
    let o = run(&["table", "build", "32"]);
    assert_eq!(o.status.code(), Some(0));
    let golden = std::fs::read_to_string(data("tables/golden.csv")).unwrap();
    let expected: Vec<&str> = golden.lines().take(32).collect();
    assert_eq!(stdout(&o).lines().collect::<Vec<_>>(), expected);
}

#[test]
fn table_build_beyond_supported_range_fails() {
    let o = run(&["table", "build", "64"]);
    assert_eq!(o.status.code(), Some(4));
    assert!(String::from_utf8(o.stderr).unwrap().contains("step 6"));
}

#[test]
fn table_verify_golden_and_mutated() {
    let o = run(&["table", "verify"]);
    assert_eq!(o.status.code(), Some(0));
    let golden = std::fs::read_to_string(data("tables/golden.csv")).unwrap();
    let mutated = golden.replacen("6,3_1*4_1,6,", "6,3_1*4_1,7,", 1);
    assert_ne!(mutated, golden);
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("mutated.csv");
    std::fs::write(&file, mutated).unwrap();
    let o = run(&["table", "verify", &file.to_string_lossy()]);
    assert_eq!(o.status.code(), Some(4));
    assert_eq!(stdout(&o).lines().count(), 1, "{}", stdout(&o));
}

#[test]
fn analytic_count_near_one_hundred() {
    let o = run(&["analytic", "count", "--T", "100", "--P", "1000000"]);
    assert_eq!(o.status.code(), Some(0));
    let row = stdout(&o).lines().nth(1).unwrap().to_string();
    let fields: Vec<f64> = row.split(',').map(|f| f.parse().unwrap()).collect();
    assert_eq!(fields[4].round(), 29.0);
    assert_eq!(fields[5], 29.0);
}

#[test]
fn analytic_mellin_and_theta() {
    let o = run(&["analytic", "mellin", "--s", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["analytic", "theta", "--tau-re", "1", "--tau-im", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["analytic", "theta", "--tau-im", "-1"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn analytic_monodromy_phases() {
    let o = run(&["analytic", "monodromy", "--k", "1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let j: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let phases: Vec<f64> = j["monodromy_eigenphases"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_f64().unwrap())
        .collect();
    let pi = std::f64::consts::PI;
    for p in &phases[..3] {
        assert!((p + pi / 12.0).abs() < 1e-12);
    }
    assert!((phases[3] - pi / 4.0).abs() < 1e-12);
    assert_eq!(j["central_charge"], "4/3");
}

#[test]
fn analytic_euler_domain_error() {
    let o = run(&["analytic", "euler", "--s", "1", "--P", "100"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn identical_runs_are_byte_identical() {
    let args = [
        "--jobs", "3", "analytic", "count", "--T", "50", "100", "200", "--P", "100000",
    ];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn data_directory_comes_from_the_environment() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::create_dir_all(dir.path().join("zeros")).unwrap();
    std::fs::write(
        dir.path().join("zeros/zeros100.txt"),
        "14.134725141734693\n",
    )
    .unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_knotline"))
        .args([
            "analytic",
            "count",
            "--T",
            "20",
            "--P",
            "1000",
            "--tolerance",
            "100",
        ])
        .env("KNOTLINE_DATA", dir.path())
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().nth(1).unwrap().ends_with(",1"));
}
