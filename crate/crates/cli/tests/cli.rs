use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name).to_string_lossy().into_owned()
}

fn mzl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mzl")).args(args).output().unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn invalid_diamond_exits_2() {
    let out = mzl(&["genus", "--diamond", &fixture("bad_serre.json")]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("Serre"));
}

#[test]
fn missing_file_exits_3() {
    let out = mzl(&["zeta", "coeffs", "--diamond", "/nonexistent/diamond.json"]);
    assert_eq!(code(&out), 3);
}

#[test]
fn short_prefix_exits_4() {
    let out = mzl(&["zeta", "hankel", "--diamond", &fixture("p1.json"), "--terms", "4", "--window", "3"]);
    assert_eq!(code(&out), 4);
    let out = mzl(&["rationality", "reconstruct", "--diamond", &fixture("p1.json"), "--eval", "2,2", "--terms", "4", "--max-deg", "2"]);
    assert_eq!(code(&out), 4);
}

#[test]
fn bad_arguments_exit_2() {
    assert_eq!(code(&mzl(&["claim", "verify", "--pg", "2", "--n", "1", "--m", "5"])), 2);
    assert_eq!(code(&mzl(&["zeta", "coeffs"])), 2);
}

#[test]
fn claim_verify_exit_reflects_collisions() {
    let ok = mzl(&["claim", "verify", "--pg", "2", "--n", "2", "--m", "1:30"]);
    assert_eq!(code(&ok), 0);
    assert_eq!(stdout_json(&ok)["collisions"].as_array().unwrap().len(), 0);
    let bad = mzl(&["claim", "verify", "--pg", "1", "--n", "2", "--m", "1:3"]);
    assert_eq!(code(&bad), 1);
    assert_eq!(stdout_json(&bad)["collisions"].as_array().unwrap().len(), 15);
}

#[test]
fn witness_requires_pg_at_least_two() {
    let out = mzl(&["witness", "--diamond", &fixture("k3.json"), "--n", "1", "--m", "1:5"]);
    assert_eq!(code(&out), 2);
    let out = mzl(&["witness", "--diamond", &fixture("curve2.json"), "--n", "1", "--m", "1:5"]);
    assert_eq!(code(&out), 2);
    let out = mzl(&["witness", "--diamond", &fixture("surface_0_2_2.json"), "--n", "1", "--m", "1:5", "--invert-L", "3"]);
    assert_eq!(code(&out), 0);
}

#[test]
fn reconstruct_without_certificate_exits_1() {
    // a genus 2 curve at (2,3) is h/g with deg g = 2, deg h = 4: linear complexity 5 needs K >= 9
    let out = mzl(&["rationality", "reconstruct", "--diamond", &fixture("curve2.json"), "--eval", "2,3", "--terms", "9", "--max-deg", "3"]);
    assert_eq!(code(&out), 1);
    let out = mzl(&["rationality", "reconstruct", "--diamond", &fixture("curve2.json"), "--eval", "2,3", "--terms", "10", "--max-deg", "3"]);
    assert_eq!(code(&out), 0);
    let cert = &stdout_json(&out)["certificate"];
    assert_eq!(cert["g"], serde_json::json!(["1", "-7", "6"]));
    assert_eq!(cert["h"].as_array().unwrap().len(), 5);
}

#[test]
fn check_rejects_wrong_certificate() {
    let out = mzl(&["rationality", "check", "--series", &fixture("geometric_q.json"), "--cert", &fixture("geometric_cert.json")]);
    // ring tags differ (Q series, Z certificate)
    assert_eq!(code(&out), 2);
    let out = mzl(&["rationality", "check", "--series", &fixture("geometric_z.json"), "--cert", &fixture("geometric_cert.json")]);
    assert_eq!(code(&out), 0);
}

#[test]
fn inverted_coefficients_are_laurent() {
    let out = mzl(&["zeta", "coeffs", "--diamond", &fixture("p1.json"), "--terms", "3", "--invert-L", "1"]);
    assert_eq!(code(&out), 0);
    let v = stdout_json(&out);
    assert_eq!(v["ring"], "Laurent");
    assert_eq!(v["coeffs"][0]["lpow"], 1);
}

#[test]
fn negative_evaluation_point_parses() {
    let out = mzl(&["zeta", "coeffs", "--diamond", &fixture("p1.json"), "--terms", "3", "--eval", "-1,2"]);
    assert_eq!(code(&out), 0);
    // 1 + uv + (uv)^2 at uv = -2
    assert_eq!(stdout_json(&out)["coeffs"][2], "3");
}

#[test]
fn csv_output_has_header() {
    let out = mzl(&["--format", "csv", "zeta", "hankel", "--diamond", &fixture("curve2.json"), "--window", "3", "--eval", "2,3", "--terms", "12"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().next(), Some("window,i,zero,det"));
    assert_eq!(text.lines().count(), 9);
}
