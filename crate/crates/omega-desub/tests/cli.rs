//! End-to-end tests of the `omega-desub` binary: exit-code discipline,
//! witness output, JSON schema, format round-trips and DOT determinism.

mod common;

use std::path::PathBuf;
use std::process::{Command, Output};

use common::*;
use omega_desub::{desubstitute, text};
use serde_json::Value;

fn fixture_path(name: &str) -> String {
    format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_omega-desub"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn json_of(output: &Output) -> Value {
    serde_json::from_str(&stdout_of(output)).expect("stdout is one JSON object")
}

#[test]
fn orbit_reports_the_swap_cycle() {
    let out = run(&[
        "orbit",
        "--automaton",
        &fixture_path("triangle.aut"),
        "--subst",
        &fixture_path("swap.sub"),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out).trim(), "n=0 m=2");
}

#[test]
fn fixed_point_on_the_swap_fixture() {
    let out = run(&[
        "decide",
        "fixed-point",
        "--automaton",
        &fixture_path("triangle.aut"),
        "--subst",
        &fixture_path("swap.sub"),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.starts_with("yes"));
    assert!(text.contains("(0)^ω"), "missing 0^ω witness in: {text}");

    let out = run(&[
        "decide",
        "fixed-point",
        "--automaton",
        &fixture_path("triangle.aut"),
        "--subst",
        &fixture_path("swap.sub"),
        "--json",
    ]);
    let json = json_of(&out);
    assert_eq!(json["schema"], 1);
    assert_eq!(json["problem"], "fixed-point");
    assert_eq!(json["answer"], true);
    assert_eq!(json["witness"]["kind"], "fixed-point-lasso");
    assert_eq!(json["witness"]["cycle"], "0");
    assert!(json["elapsed_ms"].is_u64());
}

#[test]
fn sturmian_no_answer_exits_one() {
    let out = run(&[
        "decide",
        "sturmian",
        "--automaton",
        &fixture_path("loop0.aut"),
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout_of(&out).starts_with("no"));
}

#[test]
fn pure_substitutive_witness_prefix_respects_witness_len() {
    let out = run(&[
        "decide",
        "pure-substitutive",
        "--automaton",
        &fixture_path("full.aut"),
        "--subst",
        &fixture_path("fib.sub"),
        "--witness-len",
        "8",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let json = json_of(&out);
    assert_eq!(json["witness"]["kind"], "generating-letter");
    assert_eq!(json["witness"]["letter"], "0");
    assert_eq!(json["witness"]["prefix"], "01001010");
    assert_eq!(json["witness"]["orbit_index"], 0);
}

#[test]
fn morphic_through_swap2() {
    let out = run(&[
        "decide",
        "morphic",
        "--automaton",
        &fixture_path("full.aut"),
        "--subst",
        &fixture_path("fib.sub"),
        "--subst",
        &fixture_path("swap2.sub"),
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let json = json_of(&out);
    assert_eq!(json["witness"]["kind"], "morphic");
    assert_eq!(json["witness"]["outer"], "swap2");
}

#[test]
fn inf_desub_on_the_stable_pair() {
    let out = run(&[
        "decide",
        "inf-desub",
        "--automaton",
        &fixture_path("stable.aut"),
        "--subst",
        &fixture_path("stable.sub"),
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let json = json_of(&out);
    assert_eq!(json["witness"]["kind"], "directive-lasso");
    assert_eq!(json["witness"]["stem"], Value::Array(vec![]));
    assert_eq!(json["witness"]["cycle"][0], "stable");
    assert!(json["diagnostics"]["vertices"].is_u64());
}

#[test]
fn constrained_by_l0_cycle() {
    let out = run(&[
        "decide",
        "constrained",
        "--automaton",
        &fixture_path("loop0.aut"),
        "--subst",
        &fixture_path("l0.sub"),
        "--buchi",
        &fixture_path("l0-cycle.buc"),
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let json = json_of(&out);
    assert_eq!(json["witness"]["cycle"][0], "L0");
}

#[test]
fn constrained_by_the_alternation_gadget() {
    let out = run(&[
        "decide",
        "constrained",
        "--automaton",
        &fixture_path("full.aut"),
        "--subst",
        &fixture_path("l0.sub"),
        "--subst",
        &fixture_path("l1.sub"),
        "--subst",
        &fixture_path("r0.sub"),
        "--subst",
        &fixture_path("r1.sub"),
        "--buchi",
        &fixture_path("alternation.buc"),
    ]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn coding_decisions_exit_codes() {
    let cases = [
        ("words-fib.txt", 0),
        ("words-squares.txt", 1),
        ("words-zero.txt", 1),
    ];
    for (file, expected) in cases {
        let out = run(&["decide", "coding", "--words", &fixture_path(file)]);
        assert_eq!(out.status.code(), Some(expected), "for {file}");
    }
}

#[test]
fn analyze_totality_paths() {
    let out = run(&[
        "analyze",
        "totality",
        "--automaton",
        &fixture_path("l0-image.aut"),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).contains("path: L0"));

    let out = run(&[
        "analyze",
        "totality",
        "--automaton",
        &fixture_path("loop0.aut"),
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn analyze_property_h_lists_states() {
    let out = run(&[
        "analyze",
        "property-h",
        "--automaton",
        &fixture_path("full.aut"),
    ]);
    assert_eq!(out.status.code(), Some(0));

    let out = run(&[
        "analyze",
        "property-h",
        "--automaton",
        &fixture_path("loop0.aut"),
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let json = json_of(&out);
    assert_eq!(json["states"]["q"], false);
}

#[test]
fn analyze_fibonacci_indices() {
    let out = run(&[
        "analyze",
        "fibonacci",
        "--automaton",
        &fixture_path("full.aut"),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).contains("n=0"));

    let out = run(&[
        "analyze",
        "fibonacci",
        "--automaton",
        &fixture_path("loop0.aut"),
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn desub_output_round_trips() {
    let out = run(&[
        "desub",
        "--automaton",
        &fixture_path("triangle.aut"),
        "--subst",
        &fixture_path("swap.sub"),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let printed = stdout_of(&out);
    let parsed = text::parse_automaton(&printed, "cli-output").unwrap();
    let expected = desubstitute(
        &fixture_automaton("triangle.aut"),
        &fixture_substitution("swap.sub").substitution,
    )
    .unwrap();
    assert_eq!(parsed, expected);
}

#[test]
fn directive_language_prints_an_automaton() {
    let out = run(&[
        "directive-language",
        "--automaton",
        &fixture_path("stable.aut"),
        "--subst",
        &fixture_path("stable.sub"),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let lang = text::parse_automaton(&stdout_of(&out), "cli-output").unwrap();
    assert_eq!(lang.alphabet().symbols(), &["stable".to_string()]);
    assert!(lang.accepts_lasso(&[], &[0]).unwrap());
}

#[test]
fn export_dot_is_byte_deterministic() {
    let first = run(&["export-dot", "--automaton", &fixture_path("triangle.aut")]);
    let second = run(&["export-dot", "--automaton", &fixture_path("triangle.aut")]);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    assert!(stdout_of(&first).contains("digraph omega_automaton"));

    let dir = tempfile::tempdir().unwrap();
    let out_path: PathBuf = dir.path().join("meta.dot");
    let out = run(&[
        "export-dot",
        "--automaton",
        &fixture_path("triangle.aut"),
        "--subst",
        &fixture_path("swap.sub"),
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let dot = std::fs::read_to_string(&out_path).unwrap();
    assert!(dot.contains("digraph meta_automaton"));
    assert!(dot.contains("v0 -> v1 [label=\"swap\"]"));
    assert!(dot.contains("v1 -> v0 [label=\"swap\"]"));
}

#[test]
fn input_errors_exit_two() {
    let out = run(&[
        "orbit",
        "--automaton",
        "/nonexistent/a.aut",
        "--subst",
        &fixture_path("swap.sub"),
    ]);
    assert_eq!(out.status.code(), Some(2));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.aut");
    std::fs::write(&bad, "alphabet: 0\nstates: a\ninitial: a\na 1 a\n").unwrap();
    let out = run(&["decide", "sturmian", "--automaton", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("bad.aut:4"), "stderr was: {stderr}");

    let out = run(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn vertex_budget_exhaustion_exits_three() {
    let out = run(&[
        "decide",
        "sturmian",
        "--automaton",
        &fixture_path("l0-image.aut"),
        "--vertex-budget",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(3));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("budget"), "stderr was: {stderr}");
}

#[test]
fn fixtures_round_trip_bit_exactly() {
    for name in [
        "triangle.aut",
        "stable.aut",
        "full.aut",
        "loop0.aut",
        "l0-image.aut",
        "periodic01.aut",
    ] {
        let a = fixture_automaton(name);
        let printed = text::print_automaton(&a);
        assert_eq!(text::parse_automaton(&printed, name).unwrap(), a, "{name}");
    }
}
