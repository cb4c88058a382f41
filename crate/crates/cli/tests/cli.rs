use std::process::{Command, Output};

fn gelfand(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gelfand")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn enumerate_counts() {
    let out = gelfand(&["enumerate", "--family", "pb", "--n", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().count(), 10);
    // Five planar matchings on six points, the identity being the only one of rank 3.
    let out = gelfand(&["enumerate", "--family", "tl", "--n", "3", "--rank", "1"]);
    assert_eq!(stdout(&out).lines().count(), 4);
}

#[test]
fn walled_family_needs_a_wall() {
    let out = gelfand(&["enumerate", "--family", "wb", "--n", "3"]);
    assert_eq!(out.status.code(), Some(2));
    let out = gelfand(&["enumerate", "--family", "wb", "--n", "3", "--wall", "2,2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn multiply_prints_power_and_product() {
    let arc = "1 2 | 1' 2'";
    let out = gelfand(&["multiply", "--family", "pb", "--n", "2", arc, arc]);
    assert_eq!(stdout(&out).trim(), "d^1 * [1 2 | 1' 2']");
    let out = gelfand(&["multiply", "--family", "pb", "--n", "2", "1 1' | 2 2'", "1 2' | 2 1'"]);
    assert_eq!(stdout(&out).trim(), "1 * [1 2' | 2 1']");
}

#[test]
fn multiply_rejects_non_members() {
    let out = gelfand(&["multiply", "--family", "b", "--n", "2", "1 1' | 2 | 2'", "1 1' | 2 2'"]);
    assert_eq!(out.status.code(), Some(2));
    let out = gelfand(&["multiply", "--family", "b", "--n", "2", "1 1' | 3 2'", "1 1' | 2 2'"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn pb2_model_table_matches_fixture() {
    let out = gelfand(&["model-table", "--family", "pb", "--n", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), include_str!("fixtures/pb2_model_table.txt"));
}

#[test]
fn model_table_json() {
    let out = gelfand(&["model-table", "--family", "pb", "--n", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["basis"].as_array().unwrap().len(), 6);
    assert_eq!(v["table"][0][1], "-v2");
}

#[test]
fn identity_generator_row_is_the_basis() {
    let out = gelfand(&["model-table", "--family", "b", "--n", "3", "--generator", "1 1' | 2 2' | 3 3'", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let row: Vec<String> = v["table"][0].as_array().unwrap().iter().map(|e| e.as_str().unwrap().to_string()).collect();
    let expected: Vec<String> = (1..=7).map(|k| format!("v{k}")).collect();
    assert_eq!(row, expected);
}

#[test]
fn verify_pb2() {
    let out = gelfand(&["verify", "--family", "pb", "--n", "2", "--delta", "7/3"]);
    assert_eq!(out.status.code(), Some(0));
    let report: gelfand_core::Report = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(report.passed());
    let commutant = report.checks.iter().find(|c| c.name.starts_with("model_commutant")).unwrap();
    assert!(commutant.details.contains("4 simples"), "{}", commutant.details);
}

#[test]
fn verify_rejects_zero_delta() {
    let out = gelfand(&["verify", "--family", "pb", "--n", "2", "--delta", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn dims_table() {
    let out = gelfand(&["dims", "--family", "b", "--n", "3", "--format", "json"]);
    let rows: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(rows[0]["specht_dims"], serde_json::json!([1, 2, 1]));
    assert_eq!(rows[1]["q"], 3);
}

#[test]
fn render_identity_svg() {
    let out = gelfand(&["render", "1 1' | 2 2'", "--format", "svg"]);
    let svg = stdout(&out);
    assert_eq!(svg.matches("<line").count(), 2);
    assert!(svg.contains("y1=\"20\" x2=\"20\" y2=\"20\""));
    assert!(svg.contains("y1=\"40\" x2=\"20\" y2=\"40\""));
    let out = gelfand(&["render", "1 1' |", "--format", "svg"]);
    assert_eq!(out.status.code(), Some(2));
}
