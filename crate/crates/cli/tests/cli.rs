use std::process::{Command, Output};

use abelcodes_cli::report::{Payload, Report};
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_abelcodes")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = run(&full);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{args:?}: {e}"));
    (out.status.code().unwrap(), v)
}

fn validator() -> jsonschema::Validator {
    let schema: Value = serde_json::from_str(include_str!("../schema/report.schema.json")).unwrap();
    jsonschema::validator_for(&schema).unwrap()
}

const INVOCATIONS: &[(&[&str], i32)] = &[
    (&["eta", "C9xC3", "--method", "both"], 0),
    (&["eta", "C1"], 0),
    (&["eta", "C27xC9xC3xC3", "--method", "both"], 0),
    (&["eta", "C36xC6", "--method", "brute"], 0),
    (&["inventory", "C3xC3"], 0),
    (&["inventory", "C4"], 0),
    (&["inventory", "C9xC3"], 0),
    (&["witness", "C9xC3", "--h", "3,1", "--k", "3,2"], 0),
    (&["witness", "C9xC3", "--h", "3,1", "--k", "3,1"], 0),
    (&["witness", "C27xC9xC3", "--h", "1,0,0;0,3,0;0,0,1", "--k", "1,1,0;0,3,0;0,0,1"], 0),
    (&["witness", "C36xC6", "--h", "0,1,0,1", "--k", "2,1,0,0;0,0,3,1"], 0),
    (&["witness", "C4xC2", "--h", "1,0", "--k", "2,0"], 5),
    (&["witness", "C9xC3", "--h", "3,1", "--k", "1,0"], 6),
    (&["witness", "C9xC3", "--h", "3", "--k", "1,0"], 2),
    (&["codes", "C7", "--q", "2", "--weights", "--orbits"], 0),
    (&["codes", "C3xC3", "--q", "2", "--orbits"], 0),
    (&["codes", "C4", "--q", "2"], 7),
    (&["codes", "C7", "--q", "4"], 2),
    (&["eta", "C0"], 2),
    (&["eta", "D4"], 2),
    (&["eta", "C9xC9xC3", "--method", "both", "--cap", "100"], 3),
];

#[test]
fn exit_codes_and_schema() {
    let v = validator();
    for (args, code) in INVOCATIONS {
        let (got, report) = json(args);
        assert_eq!(got, *code, "{args:?}: {report}");
        let errors: Vec<String> = v.iter_errors(&report).map(|e| format!("{e} at {}", e.instance_path())).collect();
        assert!(errors.is_empty(), "{args:?}: {errors:?}");
        let typed: Report = serde_json::from_value(report.clone()).unwrap();
        assert_eq!(serde_json::to_value(&typed).unwrap(), report, "{args:?}: round trip");
        assert_eq!(typed.result.exit_code(), *code);
    }
}

#[test]
fn documented_examples() {
    let (_, r) = json(&["eta", "C9xC3", "--method", "both"]);
    assert_eq!(r["result"]["value"], 4);
    assert_eq!(r["result"]["agreement"], true);
    let (_, r) = json(&["eta", "C27xC9xC3xC3", "--method", "both"]);
    assert_eq!(r["result"]["value"], 8);
    let (_, r) = json(&["inventory", "C3xC3"]);
    let rows: Vec<(String, u64)> = r["result"]["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|row| (row["iso_type"].as_str().unwrap().to_string(), row["count"].as_u64().unwrap()))
        .collect();
    assert_eq!(rows, [("C3xC3".to_string(), 1), ("C3".to_string(), 4)]);
    let (_, r) = json(&["inventory", "C9xC3"]);
    assert_eq!(r["result"]["rows"].as_array().unwrap().len(), 4);
    let (_, r) = json(&["codes", "C7", "--q", "2", "--weights", "--orbits"]);
    let dims: Vec<u64> = r["result"]["codes"].as_array().unwrap().iter().map(|c| c["dimension"].as_u64().unwrap()).collect();
    assert_eq!(dims, [1, 3, 3]);
    assert_eq!(r["result"]["codes"][1]["weights"], serde_json::json!([[0, 1], [4, 7]]));
    assert_eq!(r["result"]["orbits"]["count"], 2);
    let (_, r) = json(&["codes", "C3xC3", "--q", "2", "--orbits"]);
    assert_eq!(r["result"]["codes"].as_array().unwrap().len(), 5);
    assert_eq!(r["result"]["orbits"]["count"], 2);
}

#[test]
fn transported_witness_is_reported() {
    let (code, r) = json(&["witness", "C27xC9xC3", "--h", "1,0,0;0,3,0;0,0,1", "--k", "1,1,0;0,3,0;0,0,1"]);
    assert_eq!(code, 0);
    let report: Report = serde_json::from_value(r).unwrap();
    let Payload::Witness(w) = report.result else { panic!("not a witness") };
    assert!(w.verified);
    assert!(w.components.iter().all(|c| c.theta_domain.len() == c.theta_images.len()));
}

#[test]
fn reports_are_reproducible() {
    for args in [&["eta", "C27xC9xC3", "--method", "both"][..], &["codes", "C9xC3", "--q", "2", "--weights", "--orbits"]] {
        let a = run(&[&["--json"], args].concat());
        let b = run(&[&["--json", "--sequential"], args].concat());
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
    let (_, r) = json(&["--timing", "eta", "C4"]);
    assert!(r["timing_ms"].is_number());
    let (_, r) = json(&["eta", "C4"]);
    assert!(r["timing_ms"].is_null());
}

#[test]
fn text_output() {
    let out = run(&["inventory", "C4"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("group C4: 3 cocyclic subgroups in 3 types"), "{text}");
    let out = run(&["codes", "C4", "--q", "2"]);
    assert_eq!(out.status.code(), Some(7));
    assert!(String::from_utf8(out.stderr).unwrap().contains("divides the group order"));
}
