use std::path::PathBuf;
use std::process::Command;

use ordalg::cli::{run, Outcome};
use serde_json::Value;

fn data(file: &str) -> String {
    format!("{}/examples/data/{file}", env!("CARGO_MANIFEST_DIR"))
}

fn ordalg(args: &[&str]) -> Outcome {
    run(std::iter::once("ordalg").chain(args.iter().copied()))
}

fn scratch(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("ordalg-{}-{name}", std::process::id()))
}

#[test]
fn degenerate_on_two_chain() {
    let out = ordalg(&["-f", &data("chain2.ord"), "check", "degenerate", "chain"]);
    assert_eq!(out.status, 1);
    let r = out.report.unwrap();
    let json: Value = serde_json::from_str(&r.to_json()).unwrap();
    assert_eq!(json["results"][0]["counterexamples"][0]["elements"], serde_json::json!([["a", "0"], ["b", "1"]]));
}

#[test]
fn proto_witness_is_first_projection() {
    let out = ordalg(&["-f", &data("chain2.ord"), "check", "proto", "chain", "--n", "1"]);
    assert_eq!(out.status, 0, "{}", out.stdout);
    let d = &out.report.unwrap().results[0].result.diagnostics;
    assert_eq!(d["alphas"], serde_json::json!(["x"]));
    assert_eq!(d["theta"], "z1");
}

#[test]
fn seed_is_rejected() {
    let out = ordalg(&["--seed", "1", "demo"]);
    assert_eq!(out.status, 3);
    assert!(out.stderr.contains("deterministic"));
}

#[test]
fn usage_errors_exit_3() {
    assert_eq!(ordalg(&["frobnicate"]).status, 3);
    assert_eq!(ordalg(&["check", "degenerate", "missing"]).status, 3);
    assert_eq!(ordalg(&["-f", &data("nope.ord"), "check", "degenerate", "x"]).status, 3);
    assert_eq!(ordalg(&["-f", &data("chain2.ord"), "check", "noncoherent", "chain"]).status, 3);
    assert_eq!(ordalg(&["--help"]).status, 0);
}

#[test]
fn parse_errors_carry_positions() {
    let path = scratch("broken.ord");
    std::fs::write(&path, "oset C { elements: a b; le: a<=b, }\n").unwrap();
    let out = ordalg(&["validate", path.to_str().unwrap()]);
    assert_eq!(out.status, 3);
    assert!(out.stderr.contains(":1:35:"), "{}", out.stderr);
}

#[test]
fn validation() {
    let ok = ordalg(&["validate", &data("chain2.ord"), &data("trunc3.ord"), &data("z3.ord"), &data("pointed.ord")]);
    assert_eq!(ok.status, 0, "{}", ok.stdout);
    let bad = ordalg(&["validate", &data("bad_entry.ord")]);
    assert_eq!(bad.status, 1);
    assert!(bad.stdout.contains("(0,1)") && bad.stdout.contains("y <= x"));
}

#[test]
fn trunc_document_has_six_subtraction_entries() {
    let text = std::fs::read_to_string(data("trunc3.ord")).unwrap();
    let doc = ordalg::cli::parse_document(&text).unwrap();
    let a = doc.algebra("T3").unwrap();
    let monus = a.theory().symbol_index("⊖").unwrap();
    assert_eq!(a.entries(monus).len(), 6);
    // pairs y <= x in a 3-chain
    assert_eq!((0..3).flat_map(|x| (0..=x).map(move |y| (x, y))).count(), 6);
}

#[test]
fn inconclusive_when_budget_stops() {
    let out = ordalg(&["-f", &data("z3.ord"), "check", "maltsev", "Z3", "--depth", "1"]);
    assert_eq!(out.status, 2, "{}", out.stdout);
    let out = ordalg(&["-f", &data("z3.ord"), "check", "maltsev", "Z3"]);
    assert_eq!(out.status, 0, "{}", out.stdout);
}

#[test]
fn diagrams() {
    assert_eq!(ordalg(&["-f", &data("pointed.ord"), "check", "ss5l", "missed"]).status, 1);
    assert_eq!(ordalg(&["-f", &data("chain2.ord"), "check", "ss5l", "trivial"]).status, 0);
}

#[test]
fn comma_and_kernel() {
    let out = ordalg(&["-f", &data("trunc3.ord"), "comma", "zero", "id"]);
    assert_eq!(out.status, 0);
    let out = ordalg(&["-f", &data("trunc3.ord"), "comma", "id", "id"]);
    assert_eq!(out.status, 1);
    let out = ordalg(&["-f", &data("trunc3.ord"), "kernel", "zero", "--colax"]);
    assert_eq!(out.report.unwrap().results[0].result.diagnostics["members"], serde_json::json!(["0", "1", "2"]));
}

#[test]
fn compose_reports_composite() {
    let out = ordalg(&["-f", &data("z3.ord"), "compose", "Z3", "", "0:1"]);
    assert_eq!(out.status, 0);
    let d = &out.report.unwrap().results[0].result.diagnostics;
    assert_eq!(d["s"].as_str().unwrap().matches('(').count(), 9);
}

/// Verdicts read back from the human text must match the mirror.
#[test]
fn demo_mirror_matches_text() {
    let path = scratch("demo.json");
    let out = ordalg(&["demo", "--report", path.to_str().unwrap()]);
    let json: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let from_json: Vec<(String, String)> = json["results"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| (e["subject"].as_str().unwrap().to_string(), e["verdict"].as_str().unwrap().to_string()))
        .collect();
    let from_text: Vec<(String, String)> = out
        .stdout
        .lines()
        .filter_map(|l| l.strip_prefix('['))
        .map(|l| {
            let (v, rest) = l.split_once("] criterion ").unwrap();
            (rest.to_string(), v.to_string())
        })
        .collect();
    assert_eq!(from_json.len(), 9);
    assert_eq!(from_json, from_text);
    let cx_json = json["results"].as_array().unwrap().iter().map(|e| e["counterexamples"].as_array().unwrap().len()).sum::<usize>();
    assert_eq!(cx_json, out.stdout.matches("counterexample:").count());
    let worst = from_json.iter().map(|(_, v)| v.as_str()).max_by_key(|v| ["pass", "inconclusive", "fail"].iter().position(|x| x == v));
    let expected = match worst.unwrap() {
        "pass" => 0,
        "fail" => 1,
        _ => 2,
    };
    assert_eq!(out.status, expected);
}

#[test]
fn binary_exit_status() {
    let st = Command::new(env!("CARGO_BIN_EXE_ordalg"))
        .args(["-f", &data("chain2.ord"), "check", "degenerate", "chain"])
        .output()
        .unwrap();
    assert_eq!(st.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&st.stdout).contains("[fail] degenerate chain"));
}
