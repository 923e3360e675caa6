use std::fs;
use std::process::{Command, Output};

fn s4bell(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_s4bell"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_passes_on_fresh_build() {
    let o = s4bell(&["verify"]);
    let text = stdout(&o);
    let rows_ok = text
        .lines()
        .filter(|l| l.starts_with("[PASS] table row"))
        .count();
    assert_eq!(rows_ok, 24, "{text}");
    assert_eq!(o.status.code(), Some(0), "{text}");
}

#[test]
fn verify_structural_checks_pass() {
    let o = s4bell(&["verify"]);
    for line in stdout(&o).lines().filter(|l| l.starts_with("[FAIL]")) {
        assert!(line.contains("table row"), "{line}");
    }
}

#[test]
fn verify_rejects_corrupted_cg_matrix() {
    let o = s4bell(&["verify", "--corrupt-cg"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("[FAIL] C orthogonality"));
}

#[test]
fn verify_is_deterministic() {
    assert_eq!(s4bell(&["verify"]).stdout, s4bell(&["verify"]).stdout);
}

#[test]
fn table_rows() {
    let text = stdout(&s4bell(&["table2"]));
    let row = text.lines().find(|l| l.contains("(1342)")).unwrap();
    let fields: Vec<&str> = row.split_whitespace().collect();
    assert_eq!(
        fields,
        ["I", "(1342)", "(5,0)", "4.63", "1.35", "0.38", "5.30", "5.30"]
    );
    let row = text.lines().find(|l| l.contains("(4321)")).unwrap();
    assert!(
        row.starts_with("IV") && row.contains("(8,2)") && row.ends_with("5.21"),
        "{row}"
    );

    let csv = stdout(&s4bell(&["table2", "--format", "csv"]));
    assert_eq!(csv.lines().count(), 25);
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&s4bell(&["table2", "--format", "json"]))).unwrap();
    assert_eq!(json.as_array().unwrap().len(), 24);
}

#[test]
fn bound_of_violating_pair() {
    let o = s4bell(&["bound", "(2,2) (7,2)"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("classical bound:   14"));
    assert!(text.contains("14.036350"));
    assert!(text.contains("VIOLATION, ratio 0.26%"));

    let json: serde_json::Value = serde_json::from_str(&stdout(&s4bell(&[
        "bound", "--format", "json", "(1324)", "(1243)",
    ])))
    .unwrap();
    assert_eq!(json["classical_bound"], 14);
    assert_eq!(json["violation"], true);
    let q = json["quantum_bound"].as_f64().unwrap();
    assert!((q - 14.036).abs() < 5e-4);
    let back: s4bell::Report = serde_json::from_value(json).unwrap();
    assert!(back.is_consistent());
}

#[test]
fn bound_of_single_orbit() {
    let text = stdout(&s4bell(&["bound", "(1,0)"]));
    assert!(text.contains("classical bound:   8"));
    assert!(text.contains("quantum bound:     8.00"));
    assert!(text.contains("no violation"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["bound", "(2,2)", "(2,2)"][..],
        &["bound", "(9,0)"],
        &["bound", "(1,0) (2,0) (3,0)"],
        &["cycles", "(1,0)"],
        &["bound"],
        &["frobnicate"],
    ] {
        assert_eq!(s4bell(args).status.code(), Some(2), "{args:?}");
    }
    let err = String::from_utf8(s4bell(&["bound", "(2,2) (2,2)"]).stderr).unwrap();
    assert!(err.contains("more than once"));
}

#[test]
fn cycle_diagrams() {
    let text = stdout(&s4bell(&["cycles", "(4,2)", "(7,0)"]));
    assert!(text.starts_with("orbits (4,2) (7,0): 8 cycles of length 6"));
    assert!(text.contains("cycle 1\n  A: 10 11 12\n  B: 42 30 70\n"));
    let a_rows: Vec<&str> = text.lines().filter(|l| l.starts_with("  A:")).collect();
    assert_eq!(a_rows.len(), 8);
    assert!(a_rows.iter().all(|r| r.split_whitespace().count() == 4));

    let text = stdout(&s4bell(&["cycles", "(6,2) (8,2)"]));
    assert!(text.starts_with("orbits (6,2) (8,2): 12 cycles of length 4"));
    assert!(text.contains("  A: 10 51\n  B: 62 82\n"));

    let json: serde_json::Value = serde_json::from_str(&stdout(&s4bell(&[
        "cycles", "--format", "json", "(2,0)", "(3,2)",
    ])))
    .unwrap();
    let cycles = json["cycles"].as_array().unwrap();
    let len = json["cycle_length"].as_u64().unwrap() as usize;
    assert!(cycles.iter().all(|c| c.as_array().unwrap().len() == len));
    assert_eq!(cycles.len() * len, 48);
}

#[test]
fn chsh_baseline() {
    let text = stdout(&s4bell(&["chsh"]));
    assert!(text.starts_with("classical 2, quantum 2.828427"), "{text}");
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("chsh.json");
    let o = s4bell(&["chsh", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let json: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert!((json["quantum"].as_f64().unwrap() - 8f64.sqrt()).abs() < 1e-12);
}

#[test]
fn unwritable_output_fails() {
    let o = s4bell(&["chsh", "--out", "/nonexistent-dir/x/y.txt"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn scan_writes_identical_files_twice() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    let oa = s4bell(&[
        "scan",
        "--workers",
        "1",
        "--out",
        a.path().to_str().unwrap(),
    ]);
    let ob = s4bell(&[
        "scan",
        "--workers",
        "4",
        "--out",
        b.path().to_str().unwrap(),
    ]);
    assert_eq!(oa.status.code(), Some(0));
    assert_eq!(oa.stdout, ob.stdout);
    for name in ["scan.json", "scan.csv", "scan.txt"] {
        let x = fs::read(a.path().join(name)).unwrap();
        let y = fs::read(b.path().join(name)).unwrap();
        assert!(!x.is_empty());
        assert_eq!(x, y, "{name}");
    }
    let csv = fs::read_to_string(a.path().join("scan.csv")).unwrap();
    assert_eq!(csv.lines().count(), 1 + 24 + 276);
    let summary = stdout(&oa);
    assert!(summary.contains("single-orbit violations: 0"));
    assert!(summary.contains("(2,2) (7,2)"));
}
