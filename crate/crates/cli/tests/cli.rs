//! End-to-end tests of the binary: exit codes, catalog round trips, and
//! byte-for-byte deterministic verification output.

use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_skewbrace"))
}

fn run(args: &[&str], dir: &Path) -> Output {
    bin().args(args).current_dir(dir).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("no signal")
}

#[test]
fn enumerate_then_validate_and_analyze() {
    let tmp = tempfile::tempdir().unwrap();
    let out = run(&["enumerate", "4", "--out", "cat", "--oracle"], tmp.path());
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert!(stdout(&out).contains("oracle agrees: 4 classes"));
    assert!(stdout(&out).contains("wrote 4 braces of order 4"));
    for i in 1..=4 {
        let file = format!("cat/order04/brace_{i:04}.brace");
        assert!(tmp.path().join(&file).is_file(), "{file} missing");
        let v = run(&["validate", &file], tmp.path());
        assert_eq!(code(&v), 0);
        assert!(stdout(&v).contains("valid skew brace of order 4"));
    }
    let a = run(&["analyze", "cat/order04/brace_0001.brace"], tmp.path());
    assert_eq!(code(&a), 0);
    let text = stdout(&a);
    assert!(text.contains("skew brace of order 4"));
    assert!(text.contains("commutator ideal:"));
    assert!(text.contains("subbraces"));
    let t = run(&["analyze", "cat/order04/brace_0001.brace", "--tsv"], tmp.path());
    assert_eq!(code(&t), 0);
    assert!(stdout(&t).lines().all(|l| l.split('\t').count() == 3));
    assert!(stdout(&t).contains("field\torder\t4"));
}

#[test]
fn single_brace_enumeration_uses_the_singular() {
    let tmp = tempfile::tempdir().unwrap();
    let out = run(&["enumerate", "2", "--out", "cat"], tmp.path());
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("wrote 1 brace of order 2"));
}

#[test]
fn invalid_tables_are_a_mathematical_failure() {
    let tmp = tempfile::tempdir().unwrap();
    // Additive C4 against a permuted copy that breaks the compatibility
    // law while both tables stay groups.
    let bad = "brace 4\n\
               0 1 2 3\n1 2 3 0\n2 3 0 1\n3 0 1 2\n\
               \n\
               0 1 2 3\n1 3 0 2\n2 0 3 1\n3 2 1 0\n";
    std::fs::write(tmp.path().join("bad.brace"), bad).unwrap();
    let v = run(&["validate", "bad.brace"], tmp.path());
    assert_eq!(code(&v), 1);
    assert!(stderr(&v).contains("not a skew brace"));
}

#[test]
fn unreadable_or_malformed_input_is_a_usage_failure() {
    let tmp = tempfile::tempdir().unwrap();
    let v = run(&["validate", "nope.brace"], tmp.path());
    assert_eq!(code(&v), 2);
    std::fs::write(tmp.path().join("garbage.brace"), "brace 3\n0 1 2\n").unwrap();
    let v = run(&["validate", "garbage.brace"], tmp.path());
    assert_eq!(code(&v), 2);
    let e = run(&["enumerate", "0"], tmp.path());
    assert_eq!(code(&e), 2);
    // Unknown subcommands and flags are rejected by the parser itself.
    let u = run(&["frobnicate"], tmp.path());
    assert_eq!(code(&u), 2);
}

#[test]
fn large_orders_need_the_opt_in_flag() {
    let tmp = tempfile::tempdir().unwrap();
    let out = run(&["enumerate", "24", "--out", "cat"], tmp.path());
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("--allow-large"));
    assert!(!tmp.path().join("cat").exists());
}

#[test]
fn verify_runs_selected_suites() {
    let tmp = tempfile::tempdir().unwrap();
    assert_eq!(code(&run(&["enumerate", "6", "--out", "cat"], tmp.path())), 0);
    let v = run(&["verify", "cat", "--theorem", "axioms"], tmp.path());
    assert_eq!(code(&v), 0, "{}", stderr(&v));
    let text = stdout(&v);
    assert!(text.contains("[pass] axioms 6.1 compatibility-law"));
    assert!(!text.contains("theoremA"));
    assert!(text.contains("conclusions verified:"));
    // A single file works as a one-brace catalog.
    let v = run(&["verify", "cat/order06/brace_0002.brace", "--theorem", "ybe"], tmp.path());
    assert_eq!(code(&v), 0);
    assert!(stdout(&v).contains("[pass] ybe 6.1 braid"));
    let bogus = run(&["verify", "cat", "--theorem", "frobnicate"], tmp.path());
    assert_eq!(code(&bogus), 2);
    assert!(stderr(&bogus).contains("theoremA"));
    std::fs::create_dir(tmp.path().join("empty")).unwrap();
    let v = run(&["verify", "empty"], tmp.path());
    assert_eq!(code(&v), 0);
    assert!(stdout(&v).contains("0 instances"));
}

#[test]
fn criterion_9_verification_output_is_deterministic() {
    let tmp = tempfile::tempdir().unwrap();
    assert_eq!(code(&run(&["enumerate", "6", "--out", "cat"], tmp.path())), 0);
    let args = ["verify", "cat", "--theorem", "all", "--tsv"];
    let first = run(&args, tmp.path());
    let second = run(&args, tmp.path());
    assert_eq!(code(&first), 0);
    let pass = first.stdout == second.stdout && !first.stdout.is_empty();
    // Parallelism must not leak into the output order.
    let serial = run(&["verify", "cat", "--theorem", "all", "--tsv", "--jobs", "1"], tmp.path());
    let wide = run(&["verify", "cat", "--theorem", "all", "--tsv", "--jobs", "4"], tmp.path());
    let pass = pass && serial.stdout == first.stdout && wide.stdout == first.stdout;
    println!(
        "CRITERION 9 [{}]: identical verification runs produce identical bytes",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass);
    let tsv = stdout(&first);
    assert!(tsv.lines().any(|l| l.starts_with("#overall")));
    assert!(tsv
        .lines()
        .filter(|l| !l.starts_with('#'))
        .all(|l| l.split('\t').count() == 5));
}

#[test]
fn verify_report_can_be_written_to_a_file() {
    let tmp = tempfile::tempdir().unwrap();
    assert_eq!(code(&run(&["enumerate", "5", "--out", "cat"], tmp.path())), 0);
    let v = run(
        &["verify", "cat", "--theorem", "all", "--tsv", "--out", "report.tsv"],
        tmp.path(),
    );
    assert_eq!(code(&v), 0);
    assert!(stdout(&v).contains("report written to report.tsv"));
    let body = std::fs::read_to_string(tmp.path().join("report.tsv")).unwrap();
    assert!(body.ends_with('\n'));
    assert!(body.lines().last().unwrap().starts_with("#overall"));
}
