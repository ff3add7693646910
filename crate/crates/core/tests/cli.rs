use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use gislat::io::lattice_from_json;
use serde_json::Value;

fn graph(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("examples/graphs").join(name)
}

fn gislat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gislat")).args(args).output().unwrap()
}

fn gislat_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_gislat"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn path(name: &str) -> String {
    graph(name).to_string_lossy().into_owned()
}

#[test]
fn check_reports_forks_and_atoms() {
    let out = gislat(&["check", &path("fork.graph"), "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["lower_semimodular"], false);
    assert_eq!(v["forked"], serde_json::json!(["b"]));
    assert_eq!(v["condition_iv"], false);
    assert_eq!(v["atomistic_predicate"], false);
    assert_eq!(v["atoms"].as_array().unwrap().len(), 3);
}

#[test]
fn check_reports_preconditions_per_field() {
    let v = json(&gislat(&["check", &path("atomistic.graph"), "--json"]));
    assert_eq!(v["atomistic_predicate"], true);
    assert!(v["condition_iv"]["error"].is_string());
    let v = json(&gislat(&["check", &path("loop.graph"), "--json"]));
    assert_eq!(v["acyclic"], false);
}

#[test]
fn input_errors_exit_2() {
    let out = gislat_stdin(&["check", "-"], "");
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 1, column 1"));
    let out = gislat_stdin(&["check", "-"], "vertex a\nedge a b\n");
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2, column 8"));
    assert_eq!(gislat(&["check", "/nonexistent/graph"]).status.code(), Some(2));
    let out = gislat(&["lattice", &path("loop.graph")]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("gislat check"));
}

#[test]
fn stdin_input() {
    let out = gislat_stdin(&["lattice", "-", "--json"], "vertex x\nvertex y\nedge x y\n");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["elements"].as_array().unwrap().len(), 4);
}

#[test]
fn lattice_json_re_parses() {
    let out = gislat(&["lattice", &path("fork.graph"), "--json", "--properties"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let l = lattice_from_json(&text).unwrap();
    assert_eq!(l.len(), 14);
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["format"], 1);
    assert_eq!(v["properties"]["upper_semimodular"], true);
    assert_eq!(v["properties"]["lower_semimodular"], false);
    assert_eq!(v["properties"]["element_count"], 14);
}

#[test]
fn lattice_dot_file() {
    let dir = std::env::temp_dir().join(format!("gislat-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let dot = dir.join("path.dot");
    let out = gislat(&["lattice", &path("path.graph"), "--dot", dot.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&dot).unwrap();
    assert!(text.starts_with("digraph"));
    assert_eq!(text.matches("[label=").count(), 8);
    // the cube: 12 cover edges
    assert_eq!(text.matches(" -> ").count(), 12);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn caps_exit_3() {
    assert_eq!(gislat(&["lattice", &path("fork.graph"), "--cap", "5"]).status.code(), Some(3));
    assert_eq!(gislat(&["oracle", &path("fork.graph"), "--oracle-cap", "10"]).status.code(), Some(3));
    assert_eq!(gislat(&["census", "--max-vertices", "6"]).status.code(), Some(3));
}

#[test]
fn generators_command() {
    let v = json(&gislat(&["generators", &path("fork.graph"), "--json"]));
    assert_eq!(v["count"], 5);
    assert_eq!(v["pass"], true);
    let out = gislat(&["generators", &path("path.graph")]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("generators (3)"));
    let out = gislat(&["generators", &path("parallel.graph")]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("parallel edges"));
}

#[test]
fn oracle_command() {
    let out = gislat(&["oracle", &path("fork.graph")]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("|G(E)| = 24") && text.contains("congruences = 14") && text.contains("PASS"));
    let v = json(&gislat_stdin(&["oracle", "-", "--json", "--seed", "7"], "vertex a\nvertex b\nedge a b\n"));
    assert_eq!(v["semigroup_size"], 6);
    assert_eq!(v["congruences"], 4);
    assert_eq!(v["pass"], true);
    assert_eq!(gislat(&["oracle", &path("loop.graph")]).status.code(), Some(2));
}

#[test]
fn census_command() {
    let v = json(&gislat(&["census", "--max-vertices", "4", "--json"]));
    let graphs = v["graphs"].as_array().unwrap();
    assert_eq!(graphs.len(), 1 + 1 + 4 + 24);
    let four_positive = graphs
        .iter()
        .filter(|g| g["vertices"] == 4 && g["lower_semimodular"] == true)
        .count();
    assert_eq!(four_positive, 14);
    assert_eq!(v["agree"], true);
    let v = json(&gislat(&["census", "--max-vertices", "1", "--json"]));
    assert_eq!(v["graphs"].as_array().unwrap().len(), 1);
    assert_eq!(v["graphs"][0]["lower_semimodular"], true);
}

#[test]
fn check_and_lattice_properties_agree() {
    for name in ["fork.graph", "path.graph", "parallel.graph"] {
        let check = json(&gislat(&["check", &path(name), "--json"]));
        let lattice = json(&gislat(&["lattice", &path(name), "--json", "--properties"]));
        let props = &lattice["properties"];
        assert_eq!(check["lower_semimodular"], props["lower_semimodular"], "{name}");
        assert_eq!(check["atomistic_predicate"], props["atomistic"], "{name}");
        assert_eq!(props["upper_semimodular"], true, "{name}");
    }
}
