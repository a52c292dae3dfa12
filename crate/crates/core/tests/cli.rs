mod common;

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use precsys::format::{parse, serialize};
use precsys::PrecedenceGraph;

use common::*;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_precsys")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn graph_of(o: &Output) -> PrecedenceGraph {
    parse(&stdout(o)).unwrap().0
}

#[test]
fn simplify_removes_the_loose_edge() {
    let out = run(&["simplify", fixture("fig3.dcs").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let expected = precsys::fixtures::g_fig3().without_edges(&[(3, 2)]);
    assert_eq!(graph_of(&out), expected);
    assert!(stderr(&out).contains("removed 1, certified"), "{}", stderr(&out));
}

#[test]
fn reduce_then_check() {
    let dir = tempfile::tempdir().unwrap();
    let reduced = dir.path().join("reduced.dcs");
    let fig3 = fixture("fig3.dcs");
    let out = run(&["reduce", fig3.to_str().unwrap(), "--out", reduced.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let g = parse(&std::fs::read_to_string(&reduced).unwrap()).unwrap().0;
    assert_eq!(g.edge_count(), 6);
    let check = run(&["check", fig3.to_str().unwrap(), reduced.to_str().unwrap()]);
    assert_eq!(check.status.code(), Some(0));
    assert_eq!(stdout(&check).trim(), "equivalent");
}

#[test]
fn check_reports_a_witness() {
    let out = run(&["check", fixture("fig7.dcs").to_str().unwrap(), fixture("fig7_minus12.dcs").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout(&out).contains("(1, 2)"), "{}", stdout(&out));
}

#[test]
fn info_and_condense_on_fixture() {
    let out = run(&["info", fixture("fig3.dcs").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("classes: 2"), "{text}");
    assert!(text.contains("class sizes: 1 4"), "{text}");
    assert!(text.contains("removable edges: 1"), "{text}");

    let out = run(&["condense", fixture("fig3.dcs").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("e 1 2 1") && text.contains("e 2 1 0"), "{text}");
}

#[test]
fn redundant_needs_oracle_on_zero_cycles() {
    let fig1 = fixture("fig1.dcs");
    assert_eq!(run(&["redundant", fig1.to_str().unwrap()]).status.code(), Some(1));
    let out = run(&["redundant", "--oracle", fig1.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(!stdout(&out).lines().any(|l| l.starts_with("e ")), "{}", stdout(&out));
}

#[test]
fn bad_inputs_map_to_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let infeasible = dir.path().join("neg.dcs");
    std::fs::write(&infeasible, "p dcs 2 2\ne 1 2 -1\ne 2 1 0\n").unwrap();
    assert_eq!(run(&["reduce", infeasible.to_str().unwrap()]).status.code(), Some(2));
    let garbage = dir.path().join("bad.dcs");
    std::fs::write(&garbage, "p dcs 2 1\ne 1 5 0\n").unwrap();
    assert_eq!(run(&["reduce", garbage.to_str().unwrap()]).status.code(), Some(1));
    assert_eq!(run(&["reduce", "/nonexistent/file.dcs"]).status.code(), Some(1));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
}

#[test]
fn exact_limit_is_enforced() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k4.dcs");
    let mut g = PrecedenceGraph::empty(4);
    for i in 1..=4 {
        for j in 1..=4 {
            if i != j {
                g.set_edge(i, j, 0.into());
            }
        }
    }
    std::fs::write(&path, serialize(&g)).unwrap();
    let p = path.to_str().unwrap();
    assert_eq!(run(&["simplify", "--exact-limit", "5", p]).status.code(), Some(4));
    let out = run(&["simplify", "--exact-limit", "5", "--allow-heuristic", p]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stderr(&out).contains("not certified"), "{}", stderr(&out));
    // Greedy is only maximal; a 4-cycle would be optimal.
    let kept = graph_of(&out);
    assert!(kept.edge_count() >= 4 && kept.edge_count() < 12);
    assert!(precsys::systems_equivalent(&g, &kept).unwrap().equivalent);
}

#[test]
fn simplify_and_reduce_always_check_equivalent() {
    let dir = tempfile::tempdir().unwrap();
    for (k, g) in general_suite(77, 25).iter().enumerate() {
        let input = dir.path().join(format!("g{k}.dcs"));
        std::fs::write(&input, serialize(g)).unwrap();
        for cmd in ["simplify", "reduce"] {
            let output = dir.path().join(format!("g{k}.{cmd}.dcs"));
            let out = run(&[cmd, input.to_str().unwrap(), "--out", output.to_str().unwrap()]);
            assert_eq!(out.status.code(), Some(0), "{cmd} on graph {k}: {}", stderr(&out));
            let check = run(&["check", input.to_str().unwrap(), output.to_str().unwrap()]);
            assert_eq!(check.status.code(), Some(0), "{cmd} on graph {k}: {}", stdout(&check));
        }
    }
}
