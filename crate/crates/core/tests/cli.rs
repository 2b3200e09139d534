use std::process::Command;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_knotpoly")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout).into_owned(), String::from_utf8_lossy(&out.stderr).into_owned())
}

#[test]
fn lambda_uv_form() {
    let (code, out, _) = run(&["compute", "--knot", "3_1", "--invariant", "lambda", "--N", "2", "--form", "uv"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "1 + 4*u + u^2 + v");
}

#[test]
fn alexander_from_braid() {
    let (code, out, _) = run(&["compute", "--braid", "1 1 1", "--width", "2", "--invariant", "ado", "--N", "2"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "t^-1 - 1 + t");
}

#[test]
fn full_matrix_and_json() {
    let (code, out, _) = run(&["compute", "--knot", "4_1", "--invariant", "vn", "--n", "2", "--form", "uq", "--full-matrix", "--out", "json"]);
    assert_eq!(code, 0);
    let j: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(j["knot"], "4_1");
    assert_eq!(j["params"]["n"], 2);
    assert!(j["checks"]["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));
    assert!(j["shown"].as_str().unwrap().starts_with("1 + ("));
}

#[test]
fn usage_errors() {
    let (code, _, err) = run(&["compute", "--knot", "3_9", "--invariant", "ado", "--N", "2"]);
    assert_eq!(code, 2);
    assert!(err.contains("unknown knot"));
    let (code, _, err) = run(&["compute", "--knot", "3_1", "--invariant", "ado", "--N", "2", "--form", "uv"]);
    assert_eq!(code, 2);
    assert!(err.contains("--form uv"));
    let (code, _, _) = run(&["compute", "--invariant", "ado", "--N", "2"]);
    assert_eq!(code, 2);
}
