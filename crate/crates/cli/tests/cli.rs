use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::NamedTempFile;

fn file(contents: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

fn matsemi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_matsemi"))
        .args(args)
        .output()
        .unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stderr)))
}

const B: &str = r#"{"rows":3,"cols":3,"entries":[["1","1","-2"],["1","1","-2"],["-2","-2","4"]]}"#;
const FIRST_EXAMPLE: &str = r#"{"matrices":[
    {"rows":3,"cols":3,"entries":[[1,1,1],[1,1,1],[1,1,1]]},
    {"rows":3,"cols":3,"entries":[[1,1,-2],[1,1,-2],[-2,-2,4]]}]}"#;

#[test]
fn analyze_reports_witness_and_decomposition() {
    let f = file(B);
    let out = matsemi(&["analyze", f.path().to_str().unwrap()]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["rank"], 1);
    assert_eq!(v["decomposition"]["scc_count"], 1);
    assert_eq!(v["decomposition"]["kind"], "Indecomposable");
    assert_eq!(v["diagonally_similar_to_nonnegative"], true);
    assert_eq!(v["witness"]["d"], serde_json::json!(["1", "1", "-1"]));
}

#[test]
fn analyze_decomposable_matrix() {
    let f = file(r#"{"rows":3,"cols":3,"entries":[["1","0","1"],["0","1","-1"],["0","0","0"]]}"#);
    let v = json(&matsemi(&["analyze", f.path().to_str().unwrap()]));
    assert_eq!(v["decomposition"]["scc_count"], 3);
    assert_eq!(v["decomposition"]["kind"], "MultiDecomposable");
    assert_eq!(v["witness"]["d"], serde_json::json!(["1", "-1", "1"]));
}

#[test]
fn cone_queries() {
    let k = file(r#"{"dim":3,"rays":[[1,0,0],[0,1,0],[0,1,1]]}"#);
    let path = k.path().to_str().unwrap();
    let dual = json(&matsemi(&["cone", "dual", path]));
    assert_eq!(dual["rays"].as_array().unwrap().len(), 3);
    let proper = json(&matsemi(&["cone", "proper", path]));
    assert_eq!(proper["is_proper"], true);

    let a3 = file(r#"{"rows":3,"cols":3,"entries":[[1,0,1],[0,1,-1],[0,0,0]]}"#);
    let inv = json(&matsemi(&[
        "cone",
        "invariant",
        path,
        "--matrix",
        a3.path().to_str().unwrap(),
    ]));
    assert_eq!(inv["invariant"], true);

    let missing = matsemi(&["cone", "invariant", path]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn closure_and_irreducibility() {
    let g = file(FIRST_EXAMPLE);
    let path = g.path().to_str().unwrap();
    let c = json(&matsemi(&[
        "closure",
        path,
        "--max-elements",
        "100",
        "--max-word-length",
        "5",
    ]));
    assert_eq!(c["size"], 3);
    assert_eq!(c["truncated"], false);
    let capped = json(&matsemi(&["closure", path, "--max-elements", "2"]));
    assert_eq!(capped["truncated"], true);
    let irr = json(&matsemi(&["irreducible", path]));
    assert_eq!(irr["irreducible"], false);
    assert_eq!(irr["algebra_dimension"], 3);
}

#[test]
fn perron_of_ones() {
    let f = file(r#"{"rows":2,"cols":2,"entries":[[1,1],[1,1]]}"#);
    let v = json(&matsemi(&[
        "perron",
        f.path().to_str().unwrap(),
        "--tol",
        "1e-10",
    ]));
    assert!((v["rho"].as_f64().unwrap() - 2.0).abs() < 1e-9);
    let neg = file(B);
    assert_eq!(
        matsemi(&["perron", neg.path().to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn verify_prints_report_and_exits_cleanly() {
    let g = file(FIRST_EXAMPLE);
    let out = matsemi(&["verify", "semigroup", g.path().to_str().unwrap()]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["applicable"], false);
    assert_eq!(v["hypotheses"]["irreducible"]["holds"], false);

    let group = file(r#"{"matrices":[{"rows":2,"cols":2,"entries":[[1,1],[1,1]]}]}"#);
    let v = json(&matsemi(&[
        "verify",
        "group",
        group.path().to_str().unwrap(),
        "--max-elements",
        "50",
    ]));
    assert_eq!(v["hypotheses"]["group"]["holds"], false);
}

#[test]
fn fixtures_pass_and_filter() {
    let out = matsemi(&["fixtures"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["failed"], 0);
    let only = json(&matsemi(&["fixtures", "--filter", "final-example"]));
    assert!(only["results"]
        .as_array()
        .unwrap()
        .iter()
        .all(|r| r["fixture"] == "final-example"));
    let none = json(&matsemi(&["fixtures", "--filter", "no-such-fixture"]));
    assert_eq!(none["results"].as_array().unwrap().len(), 0);
}

#[test]
fn oracles() {
    let g = file(FIRST_EXAMPLE);
    let v = json(&matsemi(&["oracle", "signs", g.path().to_str().unwrap()]));
    assert_eq!(v["feasible"], false);
    let b = file(B);
    let v = json(&matsemi(&["oracle", "signs", b.path().to_str().unwrap()]));
    assert_eq!(v["signs"], serde_json::json!([1, 1, -1]));
    let t = file(r#"{"rows":2,"cols":2,"entries":[[1,1],[0,1]]}"#);
    let v = json(&matsemi(&["oracle", "subsets", t.path().to_str().unwrap()]));
    assert_eq!(v["witness_subset"], serde_json::json!([0]));
}

#[test]
fn bad_input_exits_with_two() {
    let f = file("{not json");
    let out = matsemi(&["analyze", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}
