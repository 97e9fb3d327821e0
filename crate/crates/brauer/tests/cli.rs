//! The binary's output documents are frozen: fixed input and flags give
//! byte-identical output, and the exit codes separate domain errors from
//! usage errors.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_brauer"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "`{}` failed: {}",
        args.join(" "),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf8 output")
}

#[test]
fn classify_outputs_are_frozen() {
    let got = stdout(&["classify", "fig1"]);
    let want = r#"{
  "input": "fig1",
  "verdict": {
    "detail": "a 4-gon outside the plain cross shape",
    "reason": "quadserial",
    "type": "wild",
    "witness": {
      "band": "v4#0 v4#1^-1 v4#2",
      "kind": "cross_band"
    }
  }
}
"#;
    assert_eq!(got, want);
}

#[test]
fn dot_export_is_frozen() {
    let got = stdout(&["compile", "star_1_2_3", "--format", "dot"]);
    let want = r#"digraph quiver {
  "t" [shape=ellipse];
  "e1_1" [shape=ellipse];
  "e2_1" [shape=ellipse];
  "e2_2" [shape=ellipse];
  "e3_1" [shape=ellipse];
  "e3_2" [shape=ellipse];
  "e3_3" [shape=ellipse];
  "e1_1" -> "t" [label="u1#0 @ u1"];
  "t" -> "e1_1" [label="u1#1 @ u1"];
  "e2_1" -> "e2_2" [label="u2#0 @ u2"];
  "e2_2" -> "t" [label="u2#1 @ u2"];
  "t" -> "e2_1" [label="u2#2 @ u2"];
  "e3_1" -> "e3_2" [label="u3#0 @ u3"];
  "e3_2" -> "e3_3" [label="u3#1 @ u3"];
  "e3_3" -> "t" [label="u3#2 @ u3"];
  "t" -> "e3_1" [label="u3#3 @ u3"];
}

"#;
    assert_eq!(got, want);
}

#[test]
fn seeded_runs_repeat_byte_for_byte() {
    let first = stdout(&["syzygy", "a1", "--k", "2"]);
    let second = stdout(&["syzygy", "a1", "--k", "2"]);
    assert_eq!(first, second);
    let salted = stdout(&["syzygy", "a1", "--k", "2", "--seed", "7"]);
    let again = stdout(&["syzygy", "a1", "--k", "2", "--seed", "7"]);
    assert_eq!(salted, again);
}

#[test]
fn exit_codes_separate_domain_from_usage() {
    // witness of a tame configuration: a domain refusal
    let out = run(&["witness", "star_1_2_2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("tame"));
    // unknown subcommand: a usage error
    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
    // missing input file: a domain error
    let out = run(&["classify", "/no/such/file.json"]);
    assert_eq!(out.status.code(), Some(1));
}
