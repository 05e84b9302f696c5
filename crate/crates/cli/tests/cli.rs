//! End-to-end checks of the binary: exit codes, report content, and the
//! round trip through the machine format.

use arcgraph_cli::report::Doc;
use std::io::Write;
use std::process::{Command, Output, Stdio};

fn arcgraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_arcgraph"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn arcgraph_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_arcgraph"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary starts");
    child.stdin.as_mut().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().expect("binary finishes")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

#[test]
fn classify_named_graphs() {
    let out = arcgraph(&["classify", "--name", "k33"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("max n-ac: 6"));

    let out = arcgraph(&["classify", "--name", "k5_minus_edge"]);
    assert!(stdout(&out).contains("max n-ac: 4"));

    let out = arcgraph(&["classify", "--name", "dumbbell"]);
    assert!(stdout(&out).contains("max n-ac: omega"));
}

#[test]
fn check_k5_minus_edge_at_five() {
    let out = arcgraph(&["check", "--n", "5", "--name", "k5_minus_edge"]);
    assert_eq!(out.status.code(), Some(0), "a 'no' answer is still a decision");
    let text = stdout(&out);
    assert!(text.contains("no"));
    assert!(text.contains("condition (2)"));
    assert!(text.contains("pieces 5"));
}

#[test]
fn oracle_star_at_three() {
    let out = arcgraph(&["oracle", "--n", "3", "--name", "star3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("no"));
    assert!(text.contains("failing configuration"));
}

#[test]
fn enumerate_census() {
    let out = arcgraph(&["enumerate", "--cubic", "--vertices", "6", "--filter", "6ac"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("total 1"));

    let out = arcgraph(&["enumerate", "--cubic", "--vertices", "8", "--filter", "6ac"]);
    assert!(stdout(&out).contains("total 2"));
}

#[test]
fn enumerate_exports_parseable_edge_lists() {
    let dir = std::env::temp_dir().join(format!("arcgraph-export-{}", std::process::id()));
    let out = arcgraph(&[
        "enumerate",
        "--cubic",
        "--vertices",
        "6",
        "--out",
        dir.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let mut files: Vec<_> = std::fs::read_dir(&dir).unwrap().map(|e| e.unwrap().path()).collect();
    files.sort();
    assert_eq!(files.len(), 2, "two cubic graphs on six vertices");
    for f in &files {
        let text = std::fs::read_to_string(f).unwrap();
        let parsed = arcgraph_cli::format::parse_graph(&text).unwrap();
        assert_eq!(parsed.graph.vertex_count(), 6);
        assert_eq!(parsed.graph.edge_count(), 9);
    }
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn enumerate_random_is_seeded() {
    let a = arcgraph(&["enumerate", "--random", "--vertices", "6", "--count", "3", "--seed", "9"]);
    let b = arcgraph(&["enumerate", "--random", "--vertices", "6", "--count", "3", "--seed", "9"]);
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn menger_on_k4() {
    let out = arcgraph(&["menger", "--name", "k4", "--a", "0", "--b", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("independent paths: 3"));
    assert!(text.contains("separator (size 3)"));
}

#[test]
fn stdin_and_files_parse() {
    let out = arcgraph_stdin(&["classify", "-"], "edge a b\nedge b c\nedge c a\n");
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("max n-ac: omega"));

    let dir = std::env::temp_dir().join("arcgraph-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("theta.graph");
    std::fs::write(&path, "edge a b\nedge a b\nedge a b\n").unwrap();
    let out = arcgraph(&["classify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("max n-ac: omega"));
}

#[test]
fn exit_codes() {
    // usage errors
    assert_eq!(arcgraph(&[]).status.code(), Some(1));
    assert_eq!(arcgraph(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(arcgraph(&["check", "--name", "k4"]).status.code(), Some(1), "missing --n");

    // invalid graphs
    let out = arcgraph_stdin(&["classify", "-"], "edge a\n");
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 1"));
    let out = arcgraph_stdin(&["classify", "-"], "vertex a\n");
    assert_eq!(out.status.code(), Some(2), "edgeless graphs are rejected");

    // budget exhaustion
    let out = arcgraph(&["oracle", "--n", "6", "--budget", "3", "--name", "k4"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn machine_format_round_trips() {
    let out = arcgraph(&["classify", "--name", "k5_minus_edge", "--format", "machine"]);
    let text = stdout(&out);
    let doc = Doc::parse(&text).expect("well-formed document");
    assert_eq!(doc.get("command"), Some("classify"));
    assert_eq!(doc.get("max-ac"), Some("4"));
    assert_eq!(doc.get("ac.5.answer"), Some("no"));
    assert_eq!(doc.get("ac.5.clause"), Some("5ac-condition-2"));
    assert!(doc.get("ac.5.certificate").unwrap().contains("pieces 5"));
    // identical after a parse-emit cycle
    assert_eq!(doc.emit(), text);
}

#[test]
fn verify_flag_agrees_on_named_graphs() {
    for name in ["k4", "theta", "lollipop", "happy_face"] {
        let out = arcgraph(&["classify", "--name", name, "--verify", "--n", "4"]);
        assert_eq!(out.status.code(), Some(0), "{name}");
        assert!(stdout(&out).contains("agreement"), "{name}");
    }
}
