use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_curveclass"))
}

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "fixtures", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn json_ok(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stdout));
    serde_json::from_slice(&out.stdout).expect("json output")
}

fn error_kind(args: &[&str], code: i32) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(code), "{args:?}");
    let v: Value = serde_json::from_slice(&out.stdout).expect("error json");
    v["error"]["kind"].as_str().unwrap().to_string()
}

#[test]
fn classify_reports_dual_irreducibility_certificate() {
    let v = json_ok(&["classify", "--d", "7", "--n", "9", "--k", "6"]);
    let verdicts = v["verdicts"].as_array().unwrap();
    let irr = verdicts.iter().find(|x| x["property"] == "IRREDUCIBLE").unwrap();
    assert_eq!(irr["verdict"], "YES");
    let certs = irr["certificates"].as_array().unwrap();
    assert!(certs
        .iter()
        .any(|c| c["criterion"] == "IRR-DL" && c["route"] == "via_dual"));
}

#[test]
fn classify_table_and_exponent_flag() {
    let out = run(&["classify", "--d", "7", "--g", "0", "--c", "6", "--format", "table"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("(d,g,c) = (7,0,6)"));
    assert!(text.contains("IRREDUCIBLE"));
    assert!(run(&["classify", "--d", "7", "--g", "0", "--c", "6", "--lrq-exponent", "3"]).status.success());
    assert_eq!(error_kind(&["classify", "--d", "7", "--g", "0", "--c", "6", "--lrq-exponent", "4"], 2), "usage");
}

#[test]
fn invalid_inputs_exit_with_two() {
    assert_eq!(error_kind(&["classify", "--d", "3", "--g", "5", "--c", "1"], 2), "not_admissible");
    assert_eq!(error_kind(&["classify", "--d", "4", "--g", "0"], 2), "usage");
    assert_eq!(error_kind(&["classify", "--d", "4", "--g", "0", "--c", "3", "--n", "1", "--k", "1"], 2), "usage");
    assert_eq!(error_kind(&["frobnicate"], 2), "usage");
    assert_eq!(error_kind(&["pluecker-check", "--input", "/nonexistent/curve.json"], 2), "io");

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"ambient_dim\": 2,").unwrap();
    assert_eq!(error_kind(&["dual", "--input", bad.to_str().unwrap()], 2), "malformed_json");

    let shape = dir.path().join("shape.json");
    std::fs::write(&shape, r#"{"ambient_dim": 3, "degree": 2, "coords": [["1","0","0"],["0","1","0"],["0","0","1"]]}"#)
        .unwrap();
    assert_eq!(error_kind(&["dual", "--input", shape.to_str().unwrap()], 2), "dimension_mismatch");
}

#[test]
fn help_exits_zero() {
    assert!(run(&["--help"]).status.success());
    assert!(run(&["classify", "--help"]).status.success());
}

#[test]
fn twisted_cubic_pluecker_check() {
    let v = json_ok(&["pluecker-check", "--input", &fixture("twisted_cubic.json")]);
    assert_eq!(v["degrees"], serde_json::json!([3, 4, 3]));
    assert_eq!(v["residuals"], serde_json::json!([0, 0, 0]));
    assert_eq!(v["totals"], serde_json::json!([0, 0, 0]));
    assert_eq!(v["passes"], true);
}

#[test]
fn ramified_quartic_pluecker_check() {
    let v = json_ok(&["pluecker-check", "--input", &fixture("quartic_p3.json")]);
    assert_eq!(v["degrees"], serde_json::json!([4, 6, 4]));
    assert_eq!(v["totals"], serde_json::json!([0, 2, 0]));
    assert_eq!(v["points"].as_array().unwrap().len(), 2);
    assert_eq!(v["passes"], true);
}

#[test]
fn output_is_byte_identical_across_runs() {
    let cases: Vec<Vec<String>> = vec![
        vec!["classify".into(), "--d".into(), "7".into(), "--n".into(), "9".into(), "--k".into(), "6".into()],
        vec!["strata".into(), "--d".into(), "5".into(), "--format".into(), "dot".into()],
        vec!["dual".into(), "--input".into(), fixture("twisted_cubic.json")],
        vec!["sweep".into(), "--from".into(), "4".into(), "--to".into(), "20".into()],
    ];
    for args in cases {
        let a = bin().args(&args).output().unwrap().stdout;
        let b = bin().args(&args).output().unwrap().stdout;
        assert!(!a.is_empty());
        assert_eq!(a, b, "{args:?}");
    }
}

#[test]
fn fixtures_round_trip_through_dual_output() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["twisted_cubic.json", "conic.json", "cuspidal_cubic.json", "nodal_cubic.json", "quartic_p3.json"] {
        let first = run(&["dual", "--input", &fixture(name), "--curve-only"]);
        assert!(first.status.success(), "{name}");
        let path = dir.path().join(name);
        std::fs::write(&path, &first.stdout).unwrap();
        let bidual = run(&["dual", "--input", path.to_str().unwrap(), "--curve-only"]);
        assert!(bidual.status.success(), "{name}");
        let original = run(&["dual", "--input", &fixture(name)]);
        let report: Value = serde_json::from_slice(&original.stdout).unwrap();
        assert_eq!(report["bidual_check"], true, "{name}");
        assert_eq!(report["orthogonality"]["reduced"], true, "{name}");

        let reparsed: Value = serde_json::from_slice(&first.stdout).unwrap();
        std::fs::write(&path, serde_json::to_vec(&reparsed).unwrap()).unwrap();
        let again = run(&["dual", "--input", path.to_str().unwrap(), "--curve-only"]);
        assert_eq!(again.stdout, bidual.stdout, "{name}");
    }
}

#[test]
fn conic_dual_and_implicit_equations() {
    let v = json_ok(&["dual", "--input", &fixture("conic.json"), "--curve-only"]);
    assert_eq!(v["coords"], serde_json::json!([["0", "0", "1"], ["0", "-2", "0"], ["1", "0", "0"]]));
    let v = json_ok(&["implicitize", "--input", &fixture("cuspidal_cubic.json")]);
    assert_eq!(v["polynomial"], "x0*x2^2 - x1^3");
    assert_eq!(v["profile"]["cusps"], "1");
    assert_eq!(v["profile"]["c"], "3");
    let v = json_ok(&["implicitize", "--input", &fixture("nodal_cubic.json")]);
    assert_eq!(v["degree"], 3);
    assert_eq!(v["profile"]["nodes"], "1");
    assert_eq!(error_kind(&["implicitize", "--input", &fixture("twisted_cubic.json")], 2), "dimension_mismatch");
}

#[test]
fn frames_and_integrability() {
    let v = json_ok(&["integrable", "--input", &fixture("twisted_cubic_tangents.json")]);
    assert_eq!(v["verdict"], "INTEGRABLE");
    let tc: Value = serde_json::from_str(&std::fs::read_to_string(fixture("twisted_cubic.json")).unwrap()).unwrap();
    assert_eq!(v["recovered"]["coords"], tc["coords"]);
    let v = json_ok(&["integrable", "--input", &fixture("split_lines.json")]);
    assert_eq!(v["verdict"], "FAILS_HAT_DIM");
    assert!(v.get("recovered").is_none());
    let v = json_ok(&["integrable", "--input", &fixture("planar_tangents.json")]);
    assert_eq!(v["verdict"], "FAILS_NONDEGENERACY");
}

#[test]
fn associated_curve_of_twisted_cubic() {
    let v = json_ok(&["associated", "--input", &fixture("twisted_cubic.json"), "--k", "1"]);
    assert_eq!(v["degree"], 4);
    assert_eq!(v["plucker"].as_array().unwrap().len(), 6);
    assert_eq!(v["relations_hold"], true);
    assert_eq!(error_kind(&["associated", "--input", &fixture("twisted_cubic.json"), "--k", "3"], 2), "dimension_mismatch");
}

#[test]
fn strata_dot_and_json() {
    let out = run(&["strata", "--d", "3", "--format", "dot"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("digraph"));
    assert_eq!(text.matches(" -> ").count(), 2);
    let v = json_ok(&["strata", "--d", "4"]);
    assert!(!v["nodes"].as_array().unwrap().is_empty());
}

#[test]
fn dual_triple_swaps_degree_and_class() {
    let v = json_ok(&["dual-triple", "--d", "4", "--g", "0", "--c", "3"]);
    assert_eq!(v["dual"]["d"], "3");
    assert_eq!(v["dual"]["c"], "4");
    assert_eq!(v["input"]["cusps"], "3");
    assert_eq!(v["dual"]["nodes"], "1");
}

#[test]
fn sweep_rows() {
    let v = json_ok(&["sweep", "--from", "10", "--to", "12"]);
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[2]["k"], "25");
    let out = run(&["sweep", "--from", "10", "--to", "12", "--format", "table"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 4);
}
