//! End-to-end tests of the binary: exit codes, JSON output, and the
//! parse-back round trip.

use serde_json::Value;
use splitquat::algebra::scalar::int;
use splitquat::solver::{self, SolutionPoint};
use splitquat::verify::{self, GridSpec};
use splitquat_cli::json;
use std::io::Write;
use std::process::{Command, Stdio};

fn run(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_splitquat"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

const DOC_3_1: &str = r#"{"a":{"x0":"1","x2":"1"},
    "b":{"x1":"1","x2":"2","x3":"1"},
    "c":{"x0":"-1/4","x1":"5/2","x2":"3/4","x3":"5/2"}}"#;
const DOC_3_2: &str =
    r#"{"a":{"x0":"1","x2":"1"},"b":{"x1":"1","x2":"1"},"c":{"x0":"-1","x1":"1"}}"#;
const DOC_3_4: &str = r#"{"a":{"x0":"1","x2":"1"},"b":{"x1":"1","x3":"1"},"c":{"x0":"-1","x1":"1","x2":"-1","x3":"1"}}"#;
const DOC_3_5: &str = r#"{"a":{"x0":"1","x3":"1"},"b":{"x1":"1","x2":"1"},"c":{"x0":"1","x1":"2","x2":"2","x3":"1"}}"#;
const DOC_4_2: &str = r#"{"a":{"x0":"1","x2":"1"},"b":{"x1":"2","x3":"1"},"c":{"x0":"1","x1":"1","x2":"2","x3":"1"}}"#;
const DOC_2_1: &str = r#"{"a":{"x0":"1","x2":"1"},"b":{},"c":{"x0":"-1","x2":"-1"}}"#;

#[test]
fn solve_prints_the_single_point() {
    let (code, stdout, _) = run(&["solve", "--json"], DOC_3_1);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&stdout).unwrap();
    let points = v["solutions"]["points"].as_array().unwrap();
    assert_eq!(points.len(), 1);
    assert_eq!(points[0]["x0"], "-1/2");
    assert_eq!(points[0]["x1"], "1");
    assert_eq!(points[0]["x2"], "0");
    assert_eq!(points[0]["x3"], "1");
}

#[test]
fn solve_prints_the_plane_family() {
    let (code, stdout, _) = run(&["solve", "--json"], DOC_3_4);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&stdout).unwrap();
    let families = v["solutions"]["families"].as_array().unwrap();
    assert_eq!(families.len(), 1);
    assert_eq!(families[0]["shape"], "affine");
    assert_eq!(
        families[0]["params"].as_array().unwrap(),
        &[Value::from("x0"), Value::from("x1")]
    );
}

#[test]
fn malformed_rational_is_an_input_error() {
    let doc = r#"{"a":{"x0":"1/0","x2":"1"},"b":{},"c":{}}"#;
    let (code, _, stderr) = run(&["solve"], doc);
    assert_eq!(code, 1);
    assert!(stderr.contains("zero denominator"), "stderr: {stderr}");
}

#[test]
fn unsolvable_equation_exits_two() {
    // (1+j)x² + 1 = 0 is unsolvable
    let doc = r#"{"a":{"x0":"1","x2":"1"},"b":{},"c":{"x0":"1"}}"#;
    let (code, stdout, _) = run(&["solve"], doc);
    assert_eq!(code, 2);
    assert!(stdout.contains("no solutions"));
}

#[test]
fn invertible_leading_coefficient_is_an_input_error() {
    let doc = r#"{"a":{"x0":"1"},"b":{},"c":{"x0":"1"}}"#;
    let (code, _, stderr) = run(&["solve"], doc);
    assert_eq!(code, 1);
    assert!(stderr.contains("companion"), "stderr: {stderr}");
}

#[test]
fn companion_reports_divisor_and_point() {
    let (code, stdout, _) = run(&["companion", "--json"], DOC_4_2);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&stdout).unwrap();
    let divisors = v["divisors"].as_array().unwrap();
    assert_eq!(divisors.len(), 1);
    assert_eq!(divisors[0]["trace"], "-2");
    assert_eq!(divisors[0]["norm"], "-3");
    let points = v["union"]["points"].as_array().unwrap();
    assert_eq!(points[0]["x1"], "17/3");
}

#[test]
fn companion_lists_both_divisors_of_the_double_root_case() {
    let (code, stdout, _) = run(&["companion", "--json"], DOC_3_2);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["divisors"].as_array().unwrap().len(), 2);
}

#[test]
fn companion_inapplicable_exits_three() {
    let (code, stdout, _) = run(&["companion"], DOC_3_4);
    assert_eq!(code, 3);
    assert!(stdout.contains("identically zero"));
}

#[test]
fn verify_passes_on_solver_output() {
    let (code, stdout, _) = run(&["verify", "--json"], DOC_3_2);
    assert_eq!(code, 0, "stdout: {stdout}");
    let v: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["grid_hits"], 10);
}

#[test]
fn verify_accepts_a_custom_grid() {
    let (code, stdout, _) = run(&["verify", "--json", "--grid", "-1:1:1"], DOC_3_2);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["grid_points"], 81);
}

#[test]
fn corpus_all_pass() {
    let (code, stdout, _) = run(&["corpus"], "");
    assert_eq!(code, 0, "output:\n{stdout}");
    assert!(stdout.contains("3.5"));
    assert!(!stdout.contains("FAIL"));
}

#[test]
fn corpus_only_filter_and_json() {
    let (code, stdout, _) = run(&["corpus", "--json", "--only", "3.5"], "");
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["passed"], true);
    let cases = v["cases"].as_array().unwrap();
    assert_eq!(cases.len(), 1);
    assert_eq!(cases[0]["id"], "3.5");
    let (code, _, _) = run(&["corpus", "--only", "9.9"], "");
    assert_eq!(code, 1);
}

#[test]
fn semi_explicit_parameter_evaluation() {
    let (code, stdout, _) = run(&["solve", "--json", "--params", "1,1"], DOC_3_5);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&stdout).unwrap();
    let pts = v["params_points"].as_array().unwrap();
    assert_eq!(pts.len(), 2);
    let mut traces: Vec<f64> = pts
        .iter()
        .map(|p| p["x0"].as_str().unwrap().parse::<f64>().unwrap())
        .collect();
    traces.sort_by(|a, b| a.partial_cmp(b).unwrap());
    assert!((traces[0] + 0.1675).abs() < 5e-4);
    assert!((traces[1] - 0.3914).abs() < 5e-4);
}

#[test]
fn witness_oracle_roots_are_reported() {
    let (code, stdout, _) = run(&["solve", "--json", "--y", "1"], DOC_2_1);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&stdout).unwrap();
    let roots = &v["witness_roots"];
    // √1 over the algebra: the two real points plus the quadric family
    assert_eq!(roots["points"].as_array().unwrap().len(), 2);
    assert_eq!(roots["families"].as_array().unwrap().len(), 1);
}

#[test]
fn reads_document_from_file_argument() {
    let path = std::env::temp_dir().join("splitquat-cli-test-doc.json");
    std::fs::write(&path, DOC_3_1).unwrap();
    let (code, stdout, _) = run(&["solve", path.to_str().unwrap()], "");
    std::fs::remove_file(&path).ok();
    assert_eq!(code, 0);
    assert!(stdout.contains("-1/2 + 1 i + 0 j + 1 k"));
}

#[test]
fn unnormalized_document_is_reduced_first() {
    // d = 1+j, e = 1+i+3j+k, f = 3i+2j+3k reduces to the pinned worked
    // case with shift 1/2, so the root is -1 + i + k
    let doc = r#"{"unnormalized":{
        "d":{"x0":"1","x2":"1"},
        "e":{"x0":"1","x1":"1","x2":"3","x3":"1"},
        "f":{"x1":"3","x2":"2","x3":"3"}}}"#;
    let (code, stdout, _) = run(&["solve", "--json"], doc);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&stdout).unwrap();
    let points = v["solutions"]["points"].as_array().unwrap();
    assert_eq!(points.len(), 1);
    assert_eq!(points[0]["x0"], "-1");
    assert_eq!(points[0]["x1"], "1");
}

#[test]
fn json_output_round_trips_membership_decisions() {
    for doc in [DOC_2_1, DOC_3_1, DOC_3_2, DOC_3_4, DOC_3_5] {
        let (code, stdout, _) = run(&["solve", "--json"], doc);
        assert!(code == 0 || code == 2);
        let v: Value = serde_json::from_str(&stdout).unwrap();
        let parsed = json::set_from_value(&v["solutions"]).unwrap();
        let eq = json::equation_from_value(&serde_json::from_str(doc).unwrap()).unwrap();
        let direct = solver::solve(&eq).unwrap();
        // the parsed set and the direct set agree on membership
        assert!(verify::sets_equivalent(&parsed, &direct, 25, 1e-9));
        // and on a spread of grid points
        let grid = GridSpec::new([
            (int(-1), int(1), int(1)),
            (int(-1), int(1), int(1)),
            (int(-1), int(1), int(1)),
            (int(-1), int(1), int(1)),
        ])
        .unwrap();
        for p in grid.points() {
            let cand = SolutionPoint::Exact(p);
            assert_eq!(parsed.contains(&cand, 1e-9), direct.contains(&cand, 1e-9));
        }
    }
}
