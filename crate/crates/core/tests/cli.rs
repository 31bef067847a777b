use std::io::Write;
use std::process::{Command, Output, Stdio};

fn hyclif(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyclif")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn eval_prints_canonical_form() {
    let o = hyclif(&["--dim", "2", "eval", "sigma*sigma"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1\n");
    let o = hyclif(&["--dim", "1", "eval", "t1*e1 + e1*t1"]);
    assert_eq!(stdout(&o), "2\n");
    let o = hyclif(&["--dim", "1", "eval", "!sigma"]);
    assert_eq!(stdout(&o), "-1\n");
}

#[test]
fn exit_codes() {
    assert_eq!(hyclif(&["--dim", "2", "eval", "e3"]).status.code(), Some(1));
    assert_eq!(hyclif(&["--dim", "2", "eval", "(e1"]).status.code(), Some(1));
    assert_eq!(hyclif(&["--dim", "2", "check", "--suite", "bogus"]).status.code(), Some(3));
    assert_eq!(hyclif(&["--dim", "two", "eval", "1"]).status.code(), Some(3));
    assert_eq!(hyclif(&["--dim", "2", "frobnicate"]).status.code(), Some(3));
}

#[test]
fn error_reports_position() {
    let o = hyclif(&["--dim", "2", "eval", "e1 + e3"]);
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("line 1, col 6"), "{err}");
}

#[test]
fn check_all_passes_at_n2() {
    let o = hyclif(&["--dim", "2", "check", "--suite", "all", "--trials", "200", "--seed", "42"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(!stdout(&o).contains("FAIL"));
}

#[test]
fn check_is_seed_deterministic() {
    let args = ["--dim", "2", "check", "--suite", "hodge", "--trials", "20", "--seed", "5"];
    assert_eq!(hyclif(&args).stdout, hyclif(&args).stdout);
}

#[test]
fn tables_match_golden_files() {
    for (product, golden) in [
        ("geometric", include_str!("golden/table_geometric_n1.txt")),
        ("wedge", include_str!("golden/table_wedge_n1.txt")),
        ("lcontract", include_str!("golden/table_lcontract_n1.txt")),
    ] {
        let o = hyclif(&["--dim", "1", "table", "--product", product, "--format", "text"]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o), golden, "{product}");
    }
}

#[test]
fn repl_reads_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_hyclif"))
        .args(["--dim", "1", "repl"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b":let x = e1 + 2 t1\nx*x\n:quit\n")
        .unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "x = e1 + 2 t1\n4\n");
}
