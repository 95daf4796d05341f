//! End-to-end tests of the command-line surface and its exit-code contract:
//! 0 = success / property holds, 1 = property false / counterexample,
//! 2 = input error, 3 = capacity error.

use std::path::PathBuf;
use std::process::{Command, Output};

fn softtop(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_softtop"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn write_file(dir: &tempfile::TempDir, name: &str, contents: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

const SIERPINSKI: &str = "ground Z=a,b E=e1\n{e1:{}}\n{e1:{a}}\n{e1:{a,b}}\n";
const INDISCRETE: &str = "ground Z=a,b E=e1\n{e1:{}}\n{e1:{a,b}}\n";
const DISCRETE: &str = "ground Z=a,b E=e1\n{e1:{}}\n{e1:{a}}\n{e1:{b}}\n{e1:{a,b}}\n";

#[test]
fn validate_and_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let good = write_file(&dir, "good.top", SIERPINSKI);
    let out = softtop(&["validate", good.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("valid"));

    // Axiom (i) violation: the absolute set is missing.
    let bad = write_file(&dir, "bad.top", "ground Z=a,b E=e1\n{e1:{}}\n{e1:{a}}\n");
    let out = softtop(&["validate", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("axiom"));

    // Malformed literal: diagnostics carry line and column.
    let ugly = write_file(&dir, "ugly.top", "ground Z=a,b E=e1\n{e1:{a,}}\n");
    let out = softtop(&["validate", ugly.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    assert!(err.contains("line 2"), "diagnostics missing line: {err}");
    assert!(err.contains("column"), "diagnostics missing column: {err}");

    let out = softtop(&["validate", "/nonexistent/path.top"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn generate_round_trips_through_validate() {
    let dir = tempfile::tempdir().unwrap();
    let coll = write_file(
        &dir,
        "gen.coll",
        "ground Z=a,b E=e1,e2\n{e1:{a}; e2:{}}\n{e1:{}; e2:{b}}\n",
    );
    let out = softtop(&["generate", coll.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let topo_text = stdout(&out);
    let topo_file = write_file(&dir, "gen.top", &topo_text);
    let out = softtop(&["validate", topo_file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    // Re-generating from the emitted topology is a fixed point.
    let out = softtop(&["generate", topo_file.to_str().unwrap()]);
    assert_eq!(stdout(&out), topo_text);
}

#[test]
fn lattice_ops() {
    let dir = tempfile::tempdir().unwrap();
    let s1 = write_file(&dir, "s1.top", SIERPINSKI);
    let s2 = write_file(&dir, "s2.top", "ground Z=a,b E=e1\n{e1:{}}\n{e1:{b}}\n{e1:{a,b}}\n");
    let meet = softtop(&["op", "meet", s1.to_str().unwrap(), s2.to_str().unwrap()]);
    assert_eq!(meet.status.code(), Some(0));
    assert_eq!(stdout(&meet), INDISCRETE);
    let join = softtop(&["op", "join", s1.to_str().unwrap(), s2.to_str().unwrap()]);
    assert_eq!(stdout(&join), DISCRETE);

    // Ground mismatch is an input error.
    let other = write_file(&dir, "other.top", "ground Z=x,y E=e1\n{e1:{}}\n{e1:{x,y}}\n");
    let out = softtop(&["op", "meet", s1.to_str().unwrap(), other.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn subspace_emits_a_carrier_and_reloads() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_file(
        &dir,
        "t.top",
        "ground Z=a,b,c E=e1\n{e1:{}}\n{e1:{a}}\n{e1:{a,b,c}}\n",
    );
    let out = softtop(&["subspace", file.to_str().unwrap(), "--set", "{e1:{b,c}}"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("carrier {e1:{b,c}}"));
    let sub = write_file(&dir, "sub.top", &text);
    let out = softtop(&["validate", sub.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn check_properties() {
    let dir = tempfile::tempdir().unwrap();
    let ind = write_file(&dir, "ind.top", INDISCRETE);
    let sier = write_file(&dir, "sier.top", SIERPINSKI);

    let out = softtop(&["check", ind.to_str().unwrap(), "--prop", "t0"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout(&out), "false\n");

    let out = softtop(&["check", sier.to_str().unwrap(), "--prop", "connected"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "true\n");

    let out = softtop(&[
        "check",
        sier.to_str().unwrap(),
        "--prop",
        "dense",
        "--set",
        "{e1:{a}}",
    ]);
    assert_eq!(out.status.code(), Some(0));

    let out = softtop(&["check", sier.to_str().unwrap(), "--prop", "dense"]);
    assert_eq!(out.status.code(), Some(2));

    let out = softtop(&["check", sier.to_str().unwrap(), "--prop", "compact"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn maximal_decisions() {
    let dir = tempfile::tempdir().unwrap();
    let sier = write_file(&dir, "sier.top", SIERPINSKI);
    let disc = write_file(&dir, "disc.top", DISCRETE);

    let out = softtop(&[
        "maximal",
        sier.to_str().unwrap(),
        "--prop",
        "connected",
        "--method",
        "all",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "true\n");

    let out = softtop(&["maximal", disc.to_str().unwrap(), "--prop", "compact"]);
    assert_eq!(out.status.code(), Some(0));

    // Precondition failure: the discrete space is disconnected.
    let out = softtop(&["maximal", disc.to_str().unwrap(), "--prop", "connected"]);
    assert_eq!(out.status.code(), Some(2));

    let out = softtop(&[
        "maximal",
        sier.to_str().unwrap(),
        "--prop",
        "connected",
        "--method",
        "characterization",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn enumerate_counts_and_dot() {
    let out = softtop(&["enumerate", "--cells", "2", "--counts"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "cells=2 topologies=4\n");

    // Guard and override.
    let out = softtop(&["enumerate", "--cells", "5"]);
    assert_eq!(out.status.code(), Some(3));
    let out = softtop(&["enumerate", "--cells", "5", "--limit", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "cells=5 topologies=6942\n");

    let dir = tempfile::tempdir().unwrap();
    let dot_path = dir.path().join("lattice.dot");
    let out = softtop(&[
        "enumerate",
        "--cells",
        "2",
        "--dot",
        dot_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let dot = std::fs::read_to_string(&dot_path).unwrap();
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("->").count(), 4);
}

#[test]
fn verify_claims() {
    let out = softtop(&["verify", "CN1", "--bound", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "claim=CN1 bound=3 verdict=PASS witness=-\n");

    let out = softtop(&["verify", "CN5", "--bound", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("verdict=OBSERVED"));
    assert!(stdout(&out).contains("finding claim=CN5"));

    let out = softtop(&["verify", "NOPE", "--bound", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let out = softtop(&["verify", "CN1", "--bound", "9"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn verify_is_deterministic_across_runs_and_workers() {
    let a = softtop(&["verify", "all", "--bound", "2"]);
    let b = softtop(&["verify", "all", "--bound", "2"]);
    assert_eq!(stdout(&a), stdout(&b));
    let w1 = softtop(&["verify", "all", "--bound", "2", "--workers", "1"]);
    let w4 = softtop(&["verify", "all", "--bound", "2", "--workers", "4"]);
    assert_eq!(stdout(&w1), stdout(&w4));
    assert_eq!(stdout(&a), stdout(&w1));
}

#[test]
fn symbolic_queries_and_certificates() {
    let out = softtop(&[
        "symbolic", "--family", "fort", "--anchor", "1(e)", "--query", "closed", "--set",
        "{e:FIN{1}}",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "true\n");

    let out = softtop(&[
        "symbolic", "--family", "fort", "--anchor", "1(e)", "--query", "open", "--set",
        "{e:FIN{1}}",
    ]);
    assert_eq!(out.status.code(), Some(1));

    let out = softtop(&[
        "symbolic", "--family", "pp", "--anchor", "0(e1)", "--params", "e1,e2", "--query",
        "dense", "--set", "{e1:FIN{0}; e2:COF{}}",
    ]);
    assert_eq!(out.status.code(), Some(0));

    let out = softtop(&[
        "symbolic", "--family", "ep", "--anchor", "0(e1)", "--params", "e1,e2", "--query",
        "maximal",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("true\n"));
    assert!(text.contains("case 1"));
    assert!(text.contains("maximal soft connected"));

    // A malformed symbolic literal is an input error.
    let out = softtop(&[
        "symbolic", "--family", "fort", "--anchor", "1(e)", "--query", "open", "--set",
        "{e:FIN{x}}",
    ]);
    assert_eq!(out.status.code(), Some(2));
}
