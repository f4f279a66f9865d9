//! CLI acceptance: determinism of `table` over the builtin corpus
//! (criterion 6) and the `verify` exit-code contract.

use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_fraclocdim"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

#[test]
fn criterion_6_table_runs_are_byte_identical() {
    let first = run(&["table", "--corpus", "builtin"]);
    let second = run(&["table", "--corpus", "builtin"]);
    assert!(first.status.success() && second.status.success());
    assert!(!first.stdout.is_empty());
    assert_eq!(first.stdout, second.stdout);
    println!("ACCEPTANCE C6 byte-identical table over builtin corpus: PASS");

    // Spot-pin two rows of the summary table.
    let text = stdout(&first);
    assert!(
        text.lines().any(|l| l == "petersen(),10,15,6,6,3,5/3,5/3"),
        "petersen row missing or wrong:\n{text}"
    );
    assert!(
        text.lines().any(|l| l == "complete(4),4,6,2,2,3,2,2"),
        "complete(4) row missing or wrong:\n{text}"
    );
    // Note r(C6) = 4: the minimum |R(u,v)| over pairs at cycle distance 2.
    assert!(
        text.lines().any(|l| l == "cycle(6),6,6,6,4,1,1,3/2"),
        "cycle(6) row missing or wrong:\n{text}"
    );
}

#[test]
fn verify_exit_codes() {
    // Sound claims over the builtin corpus exit 0.
    let ok = run(&[
        "verify",
        "--claims",
        "lem-2.1-bipartite-iff-one,thm-2.17-vertex-transitive",
    ]);
    assert_eq!(ok.status.code(), Some(0), "{}", stdout(&ok));

    // The published multipartite value is contradicted by the optimum,
    // so a faithful run reports failures and exits 1.
    let failing = run(&["verify", "--claims", "lem-2.16-multipartite"]);
    assert_eq!(failing.status.code(), Some(1));
    let text = stdout(&failing);
    assert!(text.contains("FAIL"), "{text}");

    // Usage and IO problems exit 2.
    assert_eq!(run(&["verify", "--bogus-flag"]).status.code(), Some(2));
    assert_eq!(
        run(&["verify", "--corpus", "/nonexistent/corpus.txt"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["verify", "--claims", "thm-0.0-missing"]).status.code(),
        Some(2)
    );
}

#[test]
fn verify_report_formats_are_consistent() {
    let json = run(&[
        "verify",
        "--claims",
        "rem-2.8-r-le-l",
        "--corpus",
        "-",
        "--format",
        "json",
    ]);
    // No stdin piped: empty corpus, empty report list.
    assert_eq!(json.status.code(), Some(0));

    let mut child = bin()
        .args(["verify", "--claims", "rem-2.8-r-le-l", "--corpus", "-", "--format", "csv"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::null())
        .spawn()
        .unwrap();
    use std::io::Write;
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"petersen()\ncycle(4)\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("claim,subject,status,detail"));
    assert_eq!(text.lines().count(), 3);
    assert!(text.contains("rem-2.8-r-le-l,cycle(4),pass"));
}
