use std::fs;
use std::process::Command;

use rug::Float;

use riesz_cli::{run, EXIT_CHECK_FAILED, EXIT_IO, EXIT_OK, EXIT_USAGE};

fn bin(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_riesz"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn data_rows(csv: &str) -> Vec<Vec<String>> {
    csv.lines()
        .filter(|l| !l.starts_with('#'))
        .skip(1)
        .map(|l| l.split(',').map(str::to_string).collect())
        .collect()
}

fn float(s: &str) -> Float {
    Float::with_val(200, Float::parse(s.trim()).unwrap())
}

#[test]
fn eval_zero_is_exact() {
    let (code, out, _) = bin(&["eval", "0"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "0, 0, 0, maclaurin\n");
}

#[test]
fn eval_negative_is_rejected() {
    let (code, out, err) = bin(&["eval", "-1"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(out.is_empty());
    assert!(err.contains("negative"));
}

#[test]
fn eval_methods_agree() {
    let a = run(["riesz", "eval", "1", "--method", "maclaurin"]);
    let b = run(["riesz", "eval", "1", "--method", "kummer"]);
    assert_eq!((a.code, b.code), (EXIT_OK, EXIT_OK));
    let va = float(a.stdout.split(", ").nth(1).unwrap());
    let vb = float(b.stdout.split(", ").nth(1).unwrap());
    assert!(Float::with_val(200, &va - &vb).abs() <= 2e-30);
    assert!(a.stdout.trim_end().ends_with("maclaurin"));
    assert!(b.stdout.trim_end().ends_with("kummer"));
}

#[test]
fn eval_reports_within_tolerance() {
    let r = run(["riesz", "eval", "10", "--tol", "1e-20", "--digits", "25"]);
    let fields: Vec<&str> = r.stdout.trim_end().split(", ").collect();
    assert_eq!(fields.len(), 4);
    assert!(float(fields[2]) <= 1e-20);
    // Riesz(10) = -0.78067558125219647...
    assert!((float(fields[1]).to_f64() + 0.780_675_581_252_196_5).abs() < 1e-15);
}

#[test]
fn forced_theorem1_needing_too_many_terms_is_a_usage_error() {
    let r = run(["riesz", "eval", "100", "--method", "theorem1"]);
    assert_eq!(r.code, EXIT_USAGE);
    let r = run([
        "riesz", "eval", "0.5", "--method", "theorem1", "--tol", "1e-3",
    ]);
    assert_eq!(r.code, EXIT_OK);
}

#[test]
fn bad_flags() {
    assert_eq!(
        run(["riesz", "eval", "1", "--digits", "9"]).code,
        EXIT_USAGE
    );
    assert_eq!(run(["riesz", "eval", "1", "--tol", "0"]).code, EXIT_USAGE);
    assert_eq!(
        run(["riesz", "eval", "1", "--tol", "-1e-5"]).code,
        EXIT_USAGE
    );
    assert_eq!(
        run(["riesz", "eval", "1", "--method", "simpson"]).code,
        EXIT_USAGE
    );
    assert_eq!(run(["riesz", "eval", "1", "--jobs", "0"]).code, EXIT_USAGE);
    assert_eq!(run(["riesz", "eval", "1", "--c", "0"]).code, EXIT_USAGE);
    assert_eq!(run(["riesz", "eval", "nan"]).code, EXIT_USAGE);
    assert_eq!(run(["riesz", "frobnicate"]).code, EXIT_USAGE);
    assert_eq!(bin(&["eval"]).0, EXIT_USAGE);
    assert_eq!(bin(&["--help"]).0, EXIT_OK);
}

#[test]
fn general_c() {
    // c = 1 is not above the abscissa of absolute convergence of 1/zeta
    assert_eq!(run(["riesz", "eval", "1", "--c", "1"]).code, EXIT_USAGE);
    let r = run(["riesz", "eval", "3", "--c", "3"]);
    assert_eq!(r.code, EXIT_OK);
    assert!(r.stdout.trim_end().ends_with("kummer"));
}

#[test]
fn scan_grid_endpoints() {
    let r = run(["riesz", "scan", "1", "100", "2"]);
    assert_eq!(r.code, EXIT_OK);
    let header = r.stdout.lines().find(|l| !l.starts_with('#')).unwrap();
    assert_eq!(header, "x,riesz,scaled,error_bound");
    assert!(r
        .stdout
        .lines()
        .any(|l| l.starts_with('#') && l.contains("diagnostic")));
    let rows = data_rows(&r.stdout);
    assert_eq!(rows.len(), 2);
    assert_eq!(float(&rows[0][0]), 1);
    assert_eq!(float(&rows[1][0]), 100);
    for row in &rows {
        // scaled = riesz / x^{1/4}
        let x = float(&row[0]);
        let back = float(&row[2]) * x.sqrt().sqrt();
        assert!(Float::with_val(200, &back - &float(&row[1])).abs() < 1e-35);
        assert!(float(&row[3]) <= 1e-30);
        assert!(row[1].contains('e') && row[2].contains('e'));
    }
}

#[test]
fn scan_is_deterministic_and_writes_files() {
    let dir = tempfile::tempdir().unwrap();
    let p1 = dir.path().join("a.csv");
    let p2 = dir.path().join("b.csv");
    let a = run([
        "riesz",
        "scan",
        "1",
        "1000",
        "12",
        "--jobs",
        "1",
        "--out",
        p1.to_str().unwrap(),
    ]);
    let b = run([
        "riesz",
        "scan",
        "1",
        "1000",
        "12",
        "--jobs",
        "3",
        "--out",
        p2.to_str().unwrap(),
    ]);
    assert_eq!((a.code, b.code), (EXIT_OK, EXIT_OK));
    assert!(a.stdout.is_empty());
    let (ta, tb) = (
        fs::read_to_string(&p1).unwrap(),
        fs::read_to_string(&p2).unwrap(),
    );
    assert_eq!(ta, tb);
    assert_eq!(data_rows(&ta).len(), 12);
}

#[test]
fn scan_errors() {
    let (code, _, _) = bin(&["scan", "1", "10", "3", "--out", "/nonexistent-dir/out.csv"]);
    assert_eq!(code, EXIT_IO);
    assert_eq!(run(["riesz", "scan", "10", "1", "3"]).code, EXIT_USAGE);
    assert_eq!(run(["riesz", "scan", "0", "10", "3"]).code, EXIT_USAGE);
    assert_eq!(run(["riesz", "scan", "1", "10", "1"]).code, EXIT_USAGE);
}

#[test]
fn validate_default_list_passes() {
    let r = run(["riesz", "validate"]);
    assert_eq!(r.code, EXIT_OK, "{}", r.stdout);
    let rows = data_rows(&r.stdout);
    assert_eq!(rows.len(), 4);
    assert!(rows.iter().all(|row| row.last().unwrap() == "pass"));
}

#[test]
fn validate_zero_row() {
    let r = run(["riesz", "validate", "0"]);
    assert_eq!(r.code, EXIT_OK);
    let row = &data_rows(&r.stdout)[0];
    assert_eq!(row[0], "0");
    for i in [1, 3, 5] {
        assert_eq!(row[i], "0");
    }
    assert_eq!(row.last().unwrap(), "pass");
}

#[test]
fn validate_flags_bad_rows() {
    let r = run(["riesz", "validate", "1", "-2"]);
    assert_eq!(r.code, EXIT_CHECK_FAILED);
    let rows = data_rows(&r.stdout);
    assert_eq!(rows[0].last().unwrap(), "pass");
    assert_eq!(rows[1].last().unwrap(), "fail");
}

#[test]
fn zeros_bundled_table() {
    let r = run(["riesz", "zeros", "10"]);
    assert_eq!(r.code, EXIT_OK, "{}", r.stderr);
    let row = &data_rows(&r.stdout)[0];
    assert!(float(&row[3]) <= 1e-6);
    assert_eq!(row[5], "pass");
}

#[test]
fn zeros_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("z.txt");
    let source = fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/../core/data/zeros_100.txt"
    ))
    .unwrap();
    // ordinates only: the derivatives are then computed numerically
    let first: String = source
        .lines()
        .filter(|l| !l.starts_with('#'))
        .take(20)
        .map(|l| format!("{}\n", l.split_whitespace().next().unwrap()))
        .collect();
    fs::write(&path, first).unwrap();
    let r = run([
        "riesz",
        "zeros",
        "1",
        "10",
        "--digits",
        "20",
        "--zeros",
        path.to_str().unwrap(),
    ]);
    assert_eq!(r.code, EXIT_OK, "{}{}", r.stdout, r.stderr);
    for row in data_rows(&r.stdout) {
        assert!(float(&row[3]) <= 1e-6);
    }
}

#[test]
fn zeros_table_errors() {
    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty.txt");
    fs::write(&empty, "").unwrap();
    let comments = dir.path().join("comments.txt");
    fs::write(&comments, "# only a comment\n\n").unwrap();
    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "14.134725\nnot-a-number\n").unwrap();
    let unsorted = dir.path().join("unsorted.txt");
    fs::write(&unsorted, "21.022\n14.134\n").unwrap();

    for p in [&empty, &comments] {
        let (code, _, err) = bin(&["zeros", "10", "--zeros", p.to_str().unwrap()]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("table empty"));
    }
    let (code, _, err) = bin(&["zeros", "10", "--zeros", bad.to_str().unwrap()]);
    assert_eq!(code, EXIT_IO);
    assert!(err.contains("line 2"));
    assert_eq!(
        bin(&["zeros", "10", "--zeros", unsorted.to_str().unwrap()]).0,
        EXIT_IO
    );
    assert_eq!(
        bin(&["zeros", "10", "--zeros", "/nonexistent/zeros.txt"]).0,
        EXIT_IO
    );
    assert_eq!(run(["riesz", "zeros", "0.01"]).code, EXIT_USAGE);
}

#[test]
fn coeffs_are_exact() {
    let (code, out, _) = bin(&["coeffs"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "24\n-1440\n30240\n");
    let r = run(["riesz", "coeffs", "12"]);
    let lines: Vec<&str> = r.stdout.lines().collect();
    assert_eq!(lines.len(), 12);
    assert!(lines.iter().all(|l| !l.contains('.') && !l.contains('e')));
    assert!(lines.iter().any(|l| l.contains('/')));
    assert_eq!(run(["riesz", "coeffs", "0"]).code, EXIT_USAGE);
}
