//! End-to-end runs of the command-line binary.

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "fixtures", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_graphcat")).args(args).output().expect("binary runs")
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_graphcat"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("json output")
}

fn sizes(v: &serde_json::Value) -> (usize, usize) {
    (v["vertices"].as_array().unwrap().len(), v["edges"].as_array().unwrap().len())
}

#[test]
fn make_reproduces_the_fixtures() {
    for (args, file) in [
        (vec!["-c", "Q", "make", "path1"], "p1.json"),
        (vec!["-c", "Q", "make", "terminal"], "loop.json"),
        (vec!["-c", "H", "make", "k_edge", "--set", "v,w"], "h_p1.json"),
        (vec!["-c", "R", "make", "i_star", "--set", "0,1"], "i_star2.json"),
    ] {
        let out = run(&args);
        assert!(out.status.success());
        assert_eq!(String::from_utf8(out.stdout).unwrap(), std::fs::read_to_string(fixture(file)).unwrap(), "{file}");
    }
}

#[test]
fn fixtures_reload_unchanged() {
    // the hom command parses and validates, iso re-serializes both ends
    for file in ["p1.json", "loop.json", "h_p1.json", "i_star2.json", "e1.json", "e4.json"] {
        let f = fixture(file);
        let out = run(&["iso", &f, &f]);
        assert!(out.status.success(), "{file}");
        let doc = json(&out);
        let original: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&f).unwrap()).unwrap();
        assert_eq!(doc["dom"], original, "{file}");
    }
}

#[test]
fn path_exponential() {
    let p = fixture("p1.json");
    let out = run(&["exponential", "-c", "Q", &p, &p]);
    assert!(out.status.success());
    assert_eq!(sizes(&json(&out)), (4, 4));
}

#[test]
fn upsilon_diamond_of_two_incidences() {
    let out = run(&["functor", "upsilon-diamond", &fixture("i_star2.json")]);
    assert!(out.status.success());
    let doc = json(&out);
    assert_eq!(doc["kind"], "quiver");
    assert_eq!(sizes(&doc), (2, 2));
}

#[test]
fn counterexample_exit_status() {
    let out = run(&["check", "counterexample", "topos_fail"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["verdict"], "witness_found");
}

#[test]
fn glued_path_coequalizer() {
    let out = run(&["colimit", "coequalizer", &fixture("alpha.json"), &fixture("beta.json")]);
    assert!(out.status.success());
    assert_eq!(sizes(&json(&out)), (1, 1));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["-c", "Q", "make", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["check", "counterexample", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["iso", &fixture("p1.json"), &fixture("loop.json")]).status.code(), Some(1));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    let e4 = fixture("e4.json");
    assert_eq!(run(&["--bound", "2", "exponential", "-c", "Q", &fixture("p1.json"), &fixture("p1.json")]).status.code(), Some(2));
    assert_eq!(run(&["--bound", "1", "-c", "H", "limit", "product", &e4, &e4]).status.code(), Some(2));
}

#[test]
fn unknown_names_list_the_choices() {
    let out = run(&["-c", "Q", "make", "nope"]);
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("expected one of") && err.contains("path1"), "{err}");
    let out = run(&["check", "frobenius", "phi"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("phi_upsilon"));
}

#[test]
fn unknown_field_is_named() {
    let out = run_stdin(&["dot", "-"], r#"{"kind":"quiver","vertices":[],"edges":[],"endpoints":{},"colour":1}"#);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("colour"));
}

#[test]
fn unknown_vertex_is_named() {
    let doc = r#"{"kind":"hypergraph","vertices":["a"],"edges":["e"],"endpoints":{"e":["a","zz"]}}"#;
    let out = run_stdin(&["dot", "-"], doc);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("zz") && err.contains("endpoints.e"), "{err}");
}

#[test]
fn broken_square_is_rejected() {
    let doc = r#"{"kind":"morphism",
        "dom":{"kind":"incidence","vertices":["x"],"edges":["f"],"incidences":{"k":["x","f"]}},
        "cod":{"kind":"incidence","vertices":["v","w"],"edges":["e"],"incidences":{"i":["v","e"]}},
        "vertices":{"x":"w"},"edges":{"f":"e"},"incidences":{"k":"i"}}"#;
    let out = run_stdin(&["functor", "upsilon-diamond", "-"], doc);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("incidence k"));
}

#[test]
fn empty_dot() {
    let out = run_stdin(&["dot", "-"], r#"{"kind":"quiver","vertices":[],"edges":[],"endpoints":{}}"#);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "digraph G {\n}\n");
}

#[test]
fn incidence_matrix_of_one_incidence_is_a_loop() {
    let one = run(&["-c", "R", "make", "i_star", "--set", "p"]);
    let out = run_stdin(&["functor", "upsilon-star", "-"], &String::from_utf8(one.stdout).unwrap());
    assert_eq!(sizes(&json(&out)), (1, 1));
}

#[test]
fn morphisms_map_through_functors() {
    let out = run(&["functor", "incidence-forming", &fixture("alpha.json")]);
    assert!(out.status.success());
    let doc = json(&out);
    assert_eq!(doc["kind"], "morphism");
    assert!(doc["incidences"].is_object());
    assert_eq!(run(&["functor", "forget-incidence", &fixture("alpha.json")]).status.code(), Some(2));
}

#[test]
fn repeated_runs_are_identical() {
    let p = fixture("p1.json");
    for args in [
        vec!["exponential", "-c", "Q", p.as_str(), p.as_str()],
        vec!["check", "counterexample", "Fworse"],
        vec!["dot", "--view", "incidence_matrix", p.as_str()],
        vec!["hom", "--list", p.as_str(), p.as_str()],
    ] {
        let (a, b) = (run(&args), run(&args));
        assert_eq!(a.stdout, b.stdout);
        assert_eq!(a.status.code(), b.status.code());
    }
}
