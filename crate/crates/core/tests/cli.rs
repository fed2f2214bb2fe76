//! End-to-end tests of the `submax` binary: exit codes, JSON shape and
//! round-tripping, corpus diagnostics, and thread-count independence.

use std::io::Write;
use std::process::{Command, Output};

use submax::cli::{ClassifyDoc, ReportDoc};

fn submax(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_submax"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn corpus_file(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn classify_table_rows() {
    let o = submax(&["classify", "--family", "l2-prime", "--q", "7", "--pi", "2,3"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("T6.2") && out.contains("D6"));
    assert!(out.contains("T6.3") && out.contains("D8"));
    assert!(out.contains("T6.5") && out.contains("S4"));
}

#[test]
fn classify_json_round_trips() {
    for args in [
        ["classify", "--family", "l2-prime", "--q", "7", "--pi", "2,3", "--json"],
        ["classify", "--family", "sz", "--q", "8", "--pi", "2,5", "--json"],
        ["classify", "--family", "l3-3", "--q", "3", "--pi", "2,3", "--json"],
    ] {
        let o = submax(&args);
        assert_eq!(o.status.code(), Some(0));
        let text = stdout(&o);
        let doc: ClassifyDoc = serde_json::from_str(text.trim()).unwrap();
        assert_eq!(serde_json::to_string(&doc).unwrap(), text.trim());
        assert!(!text.contains('.'), "no floating point in {text}");
    }
}

#[test]
fn classify_empty_pi_regime() {
    let o = submax(&["classify", "--family", "l2-2p", "--q", "8", "--pi", "5", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("\"regime\":\"EMPTY_PI\""));
}

#[test]
fn classify_rejects_bad_input() {
    let o = submax(&["classify", "--family", "l2-2p", "--q", "16", "--pi", "2,3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("2^p with p prime"));
    assert!(stdout(&o).is_empty());
    let o = submax(&["classify", "--family", "l2-prime", "--q", "11", "--pi", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("divisible by 5"));
    let o = submax(&["classify", "--family", "l2-prime", "--q", "7", "--pi", "2,3,2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("duplicate"));
    let o = submax(&["classify", "--family", "l2-prime", "--q", "7", "--pi", "2,4"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_exit_codes() {
    let o = submax(&["verify", "--family", "l2-prime", "--q", "7", "--pi", "2,3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = submax(&["verify", "--family", "l2-prime", "--q", "7", "--pi", "2,7"]);
    assert_eq!(o.status.code(), Some(1));
    let o = submax(&["verify", "--family", "sz", "--q", "32", "--pi", "2,5", "--tier", "full"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("SUBMAX_CAP_ELEMENTS"));
}

#[test]
fn verify_respects_cap_override() {
    let o = Command::new(env!("CARGO_BIN_EXE_submax"))
        .args(["verify", "--family", "l2-prime", "--q", "7", "--pi", "2,3"])
        .env("SUBMAX_CAP_ELEMENTS", "100")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn verify_json_is_thread_independent() {
    let args = |t: &'static str| {
        vec![
            "verify", "--family", "l3-3", "--q", "3", "--pi", "2,3", "--json", "--threads", t,
        ]
    };
    let one = submax(&args("1"));
    let four = submax(&args("4"));
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
    let text = stdout(&one);
    let doc: ReportDoc = serde_json::from_str(text.trim()).unwrap();
    assert_eq!(doc.verdict, "MATCH");
    assert_eq!(doc.classes.len(), 5);
    assert_eq!(serde_json::to_string(&doc).unwrap(), text.trim());
}

#[test]
fn corpus_runs_and_writes_json_lines() {
    let f = corpus_file(
        r#"{"schema":1,"cases":[
            {"family":"l2-2p","q":4,"pi":[2,3],"tier":"full"},
            {"family":"l2-prime","q":7,"pi":[],"tier":"full"}
        ]}"#,
    );
    let out = tempfile::NamedTempFile::new().unwrap();
    let o = submax(&[
        "corpus",
        "--file",
        f.path().to_str().unwrap(),
        "--out",
        out.path().to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let lines = std::fs::read_to_string(out.path()).unwrap();
    let docs: Vec<ReportDoc> = lines.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(docs.len(), 2);
    assert_eq!(docs[0].q, 4);
    assert_eq!(docs[1].regime, submax::oracle::Regime::EmptyPi);
}

#[test]
fn empty_corpus_succeeds() {
    let f = corpus_file(r#"{"schema":1,"cases":[]}"#);
    let o = submax(&["corpus", "--file", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("0/0 cases match"));
}

#[test]
fn corrupted_expectation_fails() {
    // The D6 row is replaced by a D10 row.
    let f = corpus_file(
        r#"{"schema":1,"cases":[{"family":"l2-2p","q":4,"pi":[2,3],"tier":"full","expected":[
            {"descriptor":{"kind":"ALT4","params":[]},"order":12,"ncc":1,"aut_action":"INVARIANT","pi_maximal":true,"container":null,"pronormal":true,"intravariant":true,"table":2,"row":1},
            {"descriptor":{"kind":"DIHEDRAL","params":[10]},"order":10,"ncc":1,"aut_action":"INVARIANT","pi_maximal":true,"container":null,"pronormal":true,"intravariant":true,"table":2,"row":3}
        ]}]}"#,
    );
    let o = submax(&["corpus", "--file", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1), "{}", stdout(&o));
}

#[test]
fn malformed_corpus_reports_location() {
    let cases = [
        (
            "{\"schema\":1,\"cases\":[\n{\"family\":\"l2-2p\",\"q\":16,\"pi\":[2],\"tier\":\"full\"}]}",
            "line 2",
        ),
        (
            "{\"schema\":1,\"cases\":[\n\n{\"family\":\"l2-prime\",\"q\":7,\"pi\":[2,2],\"tier\":\"full\"}]}",
            "line 3",
        ),
        ("{\"schema\":1,\"cases\":[{\"family\":\"l9\",\"q\":7,\"pi\":[2]}]}", "unknown variant"),
        ("{\"schema\":1,\"cases\":[{\"family\":\"l2-prime\",\"q\":7,\"pi\":[2],\"typo\":1}]}", "typo"),
        ("{\"schema\":2,\"cases\":[]}", "schema"),
        ("{\"schema\":1,\"cases\":[", "EOF"),
    ];
    for (text, needle) in cases {
        let f = corpus_file(text);
        let o = submax(&["corpus", "--file", f.path().to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(2), "{text}");
        let err = stderr(&o);
        assert!(err.contains(needle), "{err:?} lacks {needle:?}");
    }
}
