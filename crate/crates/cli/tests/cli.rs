use std::process::{Command, Output};

use serde_json::Value;

fn vfpoly(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vfpoly")).args(args).env_remove("VFPOLY_COSET_LIMIT").output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn analyze_cube_from_type() {
    let out = vfpoly(&["analyze", "--p", "4", "--q", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let rec = json(&out);
    assert_eq!(rec["type"], serde_json::json!([4, 3]));
    assert_eq!(rec["order"], 48);
    assert_eq!(rec["v"], 8);
    assert_eq!(rec["vertex_faithful"], true);
}

#[test]
fn analyze_flat_with_extra_relator() {
    let out = vfpoly(&["analyze", "--p", "9", "--q", "4", "--rel", "(0121)^2 2"]);
    assert_eq!(out.status.code(), Some(0));
    let rec = json(&out);
    assert_eq!((rec["order"].as_u64(), rec["v"].as_u64()), (Some(72), Some(9)));
    assert_eq!(rec["flat"], true);
}

#[test]
fn analyze_generators_with_operators() {
    // the tetrahedron on its four vertices, then its Petrial
    let out = vfpoly(&["analyze", "--gens", "(3 4),(2 3),(1 2)", "--transform", "petrial"]);
    assert_eq!(out.status.code(), Some(0));
    let rec = json(&out);
    assert_eq!(rec["type"], serde_json::json!([4, 3]));
    assert_eq!(rec["orientable"], false);
    assert_eq!(rec["f"], 3);
}

#[test]
fn analyze_presentation_with_relator() {
    let out = vfpoly(&["analyze", "--presentation", "p=3 q=5 rel=(012)^5", "--format", "table"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l.split_whitespace().collect::<Vec<_>>() == ["order", "60"]), "{text}");
}

#[test]
fn exit_codes() {
    // not a string C-group
    assert_eq!(vfpoly(&["analyze", "--gens", "(1 2)(3 4),(2 3),(1 2)(3 4)"]).status.code(), Some(1));
    // bad presentation syntax
    assert_eq!(vfpoly(&["analyze", "--presentation", "p=3 q=x"]).status.code(), Some(2));
    // bad cycle syntax
    assert_eq!(vfpoly(&["analyze", "--gens", "(1 2,(2 3),(3 4)"]).status.code(), Some(2));
    assert_eq!(vfpoly(&["enumerate", "--vertices", "40"]).status.code(), Some(2));
    assert_eq!(vfpoly(&["verify", "no-such-suite"]).status.code(), Some(2));
    assert_eq!(vfpoly(&["analyze", "--p", "3", "--q", "7", "--coset-limit", "500"]).status.code(), Some(3));
}

#[test]
fn enumerate_writes_census_and_manifest() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("v6.jsonl");
    let out = vfpoly(&["enumerate", "--vertices", "6", "--jobs", "2", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 6);
    let manifest: Value = serde_json::from_str(&std::fs::read_to_string(dir.path().join("v6.jsonl.manifest.json")).unwrap()).unwrap();
    assert_eq!(manifest["output_hash"].as_str().unwrap().len(), 64);

    let diff = vfpoly(&["diff-census", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(diff.status.code(), Some(0));
    assert_eq!(json(&diff), serde_json::json!([]));

    // drop a row: the diff reports it missing and exits 1
    let first_line_dropped: String = text.lines().skip(1).map(|l| format!("{l}\n")).collect();
    std::fs::write(&path, first_line_dropped).unwrap();
    let diff = vfpoly(&["diff-census", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(diff.status.code(), Some(1));
    assert_eq!(json(&diff)[0]["kind"], "missing");
}

#[test]
fn enumerate_is_reproducible() {
    let a = vfpoly(&["enumerate", "--vertices", "8"]);
    let b = vfpoly(&["enumerate", "--vertices", "8", "--strategy", "pair-reps", "--jobs", "1"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_suites() {
    let out = vfpoly(&["verify", "table1"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let out = vfpoly(&["verify", "prime", "--b", "7", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["passed"], true);
    assert_eq!(vfpoly(&["verify", "flat-oracle", "--max", "8"]).status.code(), Some(0));
    assert_eq!(vfpoly(&["verify", "prime", "--b", "6"]).status.code(), Some(2));
}

#[test]
fn family_commands() {
    let out = vfpoly(&["lambda", "--p", "10", "--q", "5", "--i", "3", "--j", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let rec = json(&out);
    assert_eq!(rec["predicate"]["is_flat_polyhedron"], true);
    assert_eq!(rec["polyhedron"]["order"], 100);

    let out = vfpoly(&["lambda", "--p", "6", "--q", "4", "--i", "-1", "--j", "1"]);
    assert_eq!(out.status.code(), Some(0));

    let out = vfpoly(&["flat-catalog", "--vertices", "7", "--q-cap", "14"]);
    assert_eq!(out.status.code(), Some(0));
    let orders: Vec<u64> = json(&out).as_array().unwrap().iter().map(|e| e["record"]["order"].as_u64().unwrap()).collect();
    assert_eq!(orders, vec![28, 196]);

    let out = vfpoly(&["torus", "--s", "3", "--diagonal"]);
    assert_eq!(json(&out)["v"], 18);

    let out = vfpoly(&["petrial-dual-torus", "--s", "5"]);
    let rec = json(&out);
    assert_eq!((rec["type"].clone(), rec["v"].clone()), (serde_json::json!([4, 10]), serde_json::json!(10)));

    // {3,3}*24 is universal for its lengths
    let out = vfpoly(&["universal", "--p", "3", "--q", "3", "--order", "24", "--z1", "4", "--h", "3", "--z2", "4"]);
    assert_eq!(json(&out)["universal"], true);
}
