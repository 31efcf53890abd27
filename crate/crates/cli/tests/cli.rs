use std::process::{Command, Output};

use serde_json::Value;

fn nilchar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nilchar")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let out = nilchar(args);
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}{}", String::from_utf8_lossy(&out.stdout), String::from_utf8_lossy(&out.stderr))
    });
    (out.status.code().unwrap(), v)
}

#[test]
fn rootsys_g2_z2_set() {
    let (code, v) = json(&["rootsys", "--type", "G", "--rank", "2", "--check", "z2-set", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(v["cases"][1]["data"]["set"], serde_json::json!(["3δ+2ε", "3δ+ε"]));
    assert_eq!(v["cases"][1]["data"]["abelian"], true);
}

#[test]
fn rootsys_two_alpha_beta() {
    let (_, a1) = json(&["rootsys", "--type", "A", "--rank", "1", "--check", "two-alpha-beta", "--json"]);
    assert_eq!(a1["cases"][1]["data"]["violations"], serde_json::json!([]));
    let (_, f4) = json(&["rootsys", "--type", "F", "--rank", "4", "--check", "two-alpha-beta", "--json"]);
    assert!(f4["cases"][1]["data"]["count"].as_u64().unwrap() > 0);
}

#[test]
fn rootsys_bad_input() {
    for args in [["--type", "E", "--rank", "5"], ["--type", "Q", "--rank", "2"], ["--type", "D", "--rank", "3"]] {
        let out = nilchar(&[&["rootsys"], &args[..]].concat());
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
    }
}

#[test]
fn algebra_six_dim() {
    let (code, v) = json(&["algebra", "--builtin", "paper-example-6d", "--compute", "ucs,a,b", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(v["cases"][0]["data"]["dims"], serde_json::json!([1, 2, 3, 4, 6]));
    assert_eq!(v["cases"][1]["data"]["a_dim"], 3);
    assert_eq!(v["cases"][2]["data"]["bound_dim"], 1);
    assert_eq!(v["cases"][2]["data"]["exact"], true);
}

#[test]
fn algebra_heisenberg_and_filiform() {
    let (_, h) = json(&["algebra", "--builtin", "heisenberg", "--compute", "a,b", "--json"]);
    assert_eq!(h["cases"][0]["data"]["a_dim"], 1);
    assert_eq!(h["cases"][0]["data"]["equals_center"], true);
    assert_eq!(h["cases"][1]["data"]["bound_dim"], 1);
    let (_, f) = json(&["algebra", "--builtin", "filiform-5", "--compute", "a,b", "--json"]);
    assert_eq!(f["cases"][0]["data"]["a_dim"], 4);
    assert_eq!(f["cases"][1]["data"]["bound_dim"], 4);
    assert_eq!(f["cases"][1]["data"]["exact"], false);
}

#[test]
fn algebra_file_round_trip() {
    let out = nilchar(&["algebra", "--builtin", "nplus-C2", "--export"]);
    assert_eq!(out.status.code(), Some(0));
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c2.json");
    std::fs::write(&path, &out.stdout).unwrap();
    let (code, v) = json(&["algebra", "--file", path.to_str().unwrap(), "--compute", "ucs,b", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(v["cases"][0]["data"]["dims"], serde_json::json!([1, 2, 4]));
    assert_eq!(v["cases"][1]["data"]["bound_dim"], 3);
}

#[test]
fn algebra_file_jacobi_failure() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(
        &path,
        r#"{"dim": 6, "basis": ["x1","x2","x3","x4","x5","x6"], "brackets": [
            {"i":1,"j":2,"coeffs":{"3":"1"}}, {"i":1,"j":5,"coeffs":{"6":"1"}},
            {"i":2,"j":3,"coeffs":{"4":"1"}}, {"i":2,"j":4,"coeffs":{"6":"1"}},
            {"i":3,"j":4,"coeffs":{"6":"1"}}]}"#,
    )
    .unwrap();
    let out = nilchar(&["algebra", "--file", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("Jacobi identity fails on (x1, x2, x4)"), "{err}");
}

#[test]
fn verify_suites() {
    let out = nilchar(&["verify", "example-6d"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("example-6d: 8 cases, 0 failed -> ok"));
    let (code, v) = json(&["verify", "type-C", "--max-rank", "5", "--json"]);
    assert_eq!(code, 0);
    let dims: Vec<u64> = v["cases"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| !c["id"].as_str().unwrap().contains('/'))
        .map(|c| c["data"]["ideal_dim"].as_u64().unwrap())
        .collect();
    assert_eq!(dims, [3, 6, 10, 15]);
    let (code, v) = json(&["verify", "theorem-B-eq-Z", "--max-rank", "6", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(v["passed"], true);
}

#[test]
fn verify_errors() {
    assert_eq!(nilchar(&["verify", "nope"]).status.code(), Some(2));
    assert_eq!(nilchar(&["algebra"]).status.code(), Some(2));
    assert_eq!(nilchar(&["algebra", "--builtin", "nope"]).status.code(), Some(2));
    assert_eq!(nilchar(&["algebra", "--builtin", "heisenberg", "--compute", "zz"]).status.code(), Some(2));
}

#[test]
fn reports_are_byte_identical() {
    let a = nilchar(&["verify", "upper-triangular", "--json", "--max-rank", "6"]);
    let b = nilchar(&["verify", "upper-triangular", "--json", "--max-rank", "6"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.status.code(), Some(0));
}
