use std::io::Write;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_loopseries"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

#[test]
fn compute_plain_reproduces_sequence() {
    let o = run(&["compute", "--A", "S^1", "--Y", "S^2", "--degree", "12", "--format", "plain"]);
    assert_eq!(code(&o), 0);
    assert_eq!(
        stdout(&o),
        "num: [0,0,2,-1]\nden: [1,-1,-2,1]\ncoeffs: [0,0,2,1,5,5,14,19,42,66,131,221,417]\n"
    );
}

#[test]
fn compute_loop_of_s2() {
    let o = run(&["compute", "--A", "pt", "--Y", "S^1", "--degree", "4"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("coeffs: [0,1,1,1,1]\n"));
}

#[test]
fn compute_default_degree_is_twenty() {
    let o = run(&["compute", "--A", "pt", "--Y", "S^1"]);
    let line = stdout(&o).lines().find(|l| l.starts_with("coeffs:")).unwrap().to_owned();
    assert_eq!(line.matches(',').count(), 20);
}

#[test]
fn compute_hypothesis_gate() {
    let o = run(&["compute", "--A", "S^2", "--Y", "S^1", "--degree", "4"]);
    assert_eq!(code(&o), 0);
    let o = run(&["compute", "--A", "RP^2", "--Y", "S^2"]);
    assert_eq!(code(&o), 2);
    assert!(o.stdout.is_empty());
    assert!(String::from_utf8_lossy(&o.stderr).contains("RP^2"));
}

#[test]
fn compute_json_schema() {
    let o = run(&["compute", "--A", "S^1", "--Y", "S^2", "--degree", "5", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["numerator"].to_string(), "[0,0,2,-1]");
    assert_eq!(v["denominator"].to_string(), "[1,-1,-2,1]");
    assert_eq!(v["coefficients"].to_string(), "[0,0,2,1,5,5]");
    assert_eq!(v["degree"].to_string(), "5");
}

#[test]
fn compute_csv() {
    let o = run(&["compute", "--A", "pt", "--Y", "S^1", "--degree", "3", "--format", "csv"]);
    assert_eq!(stdout(&o), "numerator,0,1\ndenominator,1,-1\ncoefficients,0,1,1,1\ndegree,3\n");
}

#[test]
fn parse_errors_exit_two_with_offset() {
    let o = run(&["compute", "--A", "S^1 ^^ S^2", "--Y", "S^2"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("offset 4"));
    let o = run(&["compute", "--A", "nosuch", "--Y", "S^2"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("nosuch"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(code(&run(&["compute", "--A", "S^1"])), 2);
    assert_eq!(code(&run(&["frobnicate"])), 2);
    assert_eq!(code(&run(&["compute", "--A", "S^1", "--Y", "S^2", "--format", "xml"])), 2);
}

#[test]
fn verify_examples() {
    for (a, y, n) in [("S^1", "S^2", "10"), ("pt", "S^2", "10"), ("S^1", "cone(S^1)", "8")] {
        let o = run(&["verify", "--A", a, "--Y", y, "--degree", n]);
        assert_eq!(code(&o), 0, "{a} {y}: {}", stdout(&o));
        assert!(stdout(&o).contains(&format!("match through degree {n}")));
    }
}

#[test]
fn verify_hypothesis_violation() {
    let o = run(&["verify", "--A", "RP^inf", "--Y", "S^2", "--degree", "4"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn collapse_examples() {
    let o = run(&["collapse", "--A", "S^1", "--Y", "S^1 v S^2", "--mono"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).ends_with("equal\n"));

    // the flag is taken as the user's assertion
    let o = run(&["collapse", "--A", "S^1", "--Y", "S^2", "--mono"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("chi(Einf): (1 - t)/(1 - t - 2t^2 + t^3)"));

    let o = run(&["collapse", "--A", "S^1", "--Y", "S^2"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn identity_command() {
    let o = run(&["identity", "--kmax", "8", "--degree", "30"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("45 of 45"));
}

#[test]
fn catalog_entries_are_usable() {
    let mut file = tempfile_path("catalog.json");
    writeln!(
        file.1,
        r#"[{{"name": "M", "numerator": [0, 0, 1], "denominator": [1], "diagonal_null": true}}]"#
    )
    .unwrap();
    let path = file.0.to_str().unwrap().to_owned();
    let o = run(&["compute", "--A", "pt", "--Y", "M", "--degree", "4", "--catalog", &path]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("coeffs: [0,0,1,0,1]"));

    let o = run(&["verify", "--A", "M", "--Y", "M v S^3", "--degree", "9", "--catalog", &path]);
    assert_eq!(code(&o), 0);

    let o = run(&["compute", "--A", "pt", "--Y", "M", "--catalog", "/nonexistent.json"]);
    assert_eq!(code(&o), 2);
}

fn tempfile_path(name: &str) -> (std::path::PathBuf, std::fs::File) {
    let dir = std::env::temp_dir().join(format!("loopseries-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    let file = std::fs::File::create(&path).unwrap();
    (path, file)
}
