//! End-to-end checks of the binary: report determinism, exit codes, and
//! the documented result fields.

use std::process::Command;

fn omsep() -> Command {
    Command::new(env!("CARGO_BIN_EXE_omsep"))
}

fn run_json(args: &[&str]) -> (serde_json::Value, i32) {
    let out = omsep().args(args).output().expect("binary runs");
    let code = out.status.code().unwrap_or(-1);
    let value = serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("bad JSON from {:?}: {e}", args));
    (value, code)
}

#[test]
fn analyze_alternating_counts() {
    let (v, code) = run_json(&["analyze", "--alternating", "5", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["independent_sets"], 16);
    assert_eq!(v["result"]["rank"], 2);
    let (v, _) = run_json(&["analyze", "--free", "3"]);
    assert_eq!(v["result"]["independent_sets"], 8);
}

#[test]
fn analyze_graph_counts() {
    let dir = std::env::temp_dir().join("omsep-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("k23.json");
    std::fs::write(
        &path,
        serde_json::json!({
            "vertices": 5,
            "edges": [
                {"label": "1", "tail": 0, "head": 2},
                {"label": "2", "tail": 0, "head": 3},
                {"label": "3", "tail": 0, "head": 4},
                {"label": "4", "tail": 1, "head": 2},
                {"label": "5", "tail": 1, "head": 3},
                {"label": "6", "tail": 1, "head": 4},
            ]
        })
        .to_string(),
    )
    .unwrap();
    let (v, _) = run_json(&["analyze", "--graph", path.to_str().unwrap()]);
    assert_eq!(v["result"]["independent_sets"], 54);
    assert_eq!(v["result"]["acyclic_orientations"], 46);
    let (v, _) = run_json(&["outerplanar", "--graph", path.to_str().unwrap()]);
    assert_eq!(v["result"]["outerplanar"], false);
    assert_eq!(v["result"]["forbidden_minor"], "K2,3");
}

#[test]
fn reports_are_byte_identical() {
    let out1 = omsep()
        .args(["tilings", "--alternating", "4", "2"])
        .output()
        .unwrap();
    let out2 = omsep()
        .args(["tilings", "--alternating", "4", "2"])
        .output()
        .unwrap();
    assert!(!out1.stdout.is_empty());
    assert_eq!(out1.stdout, out2.stdout);
}

#[test]
fn tilings_limit_caps_output() {
    let (v, _) = run_json(&["tilings", "--alternating", "5", "2", "--limit", "1"]);
    assert_eq!(v["result"]["colocalizations"], 1);
    assert_eq!(v["result"]["collection_sizes"], serde_json::json!([16]));
    // SVG is skipped for non rank-2-alternating sources.
    let dir = std::env::temp_dir().join("omsep-cli-svg-skip");
    let (v, _) = run_json(&[
        "tilings",
        "--alternating",
        "4",
        "3",
        "--svg",
        dir.to_str().unwrap(),
    ]);
    assert!(v["result"]["svg"].as_str().unwrap().contains("skipped"));
}

#[test]
fn validation_failure_exits_3() {
    let dir = std::env::temp_dir().join("omsep-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.json");
    std::fs::write(
        &path,
        serde_json::json!({
            "elements": ["1", "2"],
            "circuits": [
                {"plus": ["1"], "minus": ["2"]},
                {"plus": ["1", "2"], "minus": []}
            ]
        })
        .to_string(),
    )
    .unwrap();
    let out = omsep()
        .args(["validate", path.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    // A valid file exits 0 and roundtrips.
    let good = dir.join("good.json");
    std::fs::write(
        &good,
        serde_json::json!({
            "elements": ["1", "2", "3"],
            "circuits": [{"plus": ["1", "3"], "minus": ["2"]}]
        })
        .to_string(),
    )
    .unwrap();
    let (v, code) = run_json(&["validate", good.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["passed"], true);
}

#[test]
fn purity_and_certificate() {
    let (v, _) = run_json(&["purity", "--alternating", "5", "3"]);
    assert_eq!(v["result"]["pure"], true);
    let (v, _) = run_json(&["purity", "--corank2", "2,2,2"]);
    assert_eq!(v["result"]["pure"], false);
    assert!(v["result"]["witness"].is_array());
    // Pentagon domains: largest component (dodecahedron) not pure, second
    // (icosahedron) pure with maximal triples.
    let (v, _) = run_json(&["purity", "--pentagon", "--domain-component", "0"]);
    assert_eq!(v["result"]["pure"], false);
    let (v, _) = run_json(&["purity", "--pentagon", "--domain-component", "1"]);
    assert_eq!(v["result"]["pure"], true);
    assert_eq!(v["result"]["max_collection_size"], 3);
    assert_eq!(v["result"]["maximal_collections"], 20);
}

#[test]
fn coherent_formula_and_tree_file() {
    let (v, _) = run_json(&["coherent", "--a", "0", "--b", "0"]);
    assert_eq!(v["result"]["colocalizations"], 6);
    assert_eq!(v["result"]["formula_matches"], true);
    // A triangulation file with the Ê₆ shape is not all-coherent.
    let dir = std::env::temp_dir().join("omsep-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("e6.json");
    std::fs::write(
        &path,
        serde_json::json!({
            "polygon": 9,
            "diagonals": [[0, 3], [0, 6], [1, 3], [3, 6], [4, 6], [7, 0]]
        })
        .to_string(),
    )
    .unwrap();
    let (v, _) = run_json(&["coherent", "--tree", path.to_str().unwrap()]);
    assert_eq!(v["result"]["tree_is_t_ab"], serde_json::Value::Null);
    assert_eq!(v["result"]["all_coherent"], false);
}
