//! The `lintype` binary: subcommands, JSON output and exit codes.

use std::process::Command;

use serde_json::Value;

fn lintype(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_lintype"))
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .args(args)
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.extend(["--json", "-"]);
    let (code, out, _) = lintype(&all);
    (code, serde_json::from_str(&out).unwrap())
}

#[test]
fn analyze_sextic_file() {
    let (code, v) = json(&["analyze", "--setting", "projective", "corpus/plane_curves.poly"]);
    assert_eq!(code, 0);
    assert_eq!(v["linear_type"]["verdict"], false);
    let pts = v["singular_points"].as_array().unwrap();
    assert_eq!(pts.len(), 3);
    let top = pts.iter().find(|p| p["point"] == "[0:0:1]").unwrap();
    assert_eq!((top["milnor"].as_u64(), top["tjurina"].as_u64()), (Some(13), Some(12)));
}

#[test]
fn inline_expression_and_ring() {
    let (code, v) = json(&["milnor", "--setting", "affine", "--expr", "y^2 - x^3", "--ring", "x,y"]);
    assert_eq!(code, 0);
    assert_eq!(v["singular_points"][0]["milnor"], 2);
    let (code, v) = json(&["classify", "--setting", "affine", "--expr", "x^3 - y^5"]);
    assert_eq!(code, 0);
    assert_eq!(v["singular_points"][0]["ade"], "E8");
}

#[test]
fn named_polynomial_and_syzygies() {
    let (code, v) = json(&[
        "syzygy",
        "--setting",
        "projective",
        "--name",
        "quintic",
        "corpus/plane_curves.poly",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["syzygies"]["rows"], 3);
    assert_eq!(v["syzygies"]["columns"], 2);
}

#[test]
fn human_summary() {
    let (code, out, _) = lintype(&["linear-type", "--setting", "affine", "--expr", "x^5 - y^6 + x^3*y^4"]);
    assert_eq!(code, 0);
    assert!(out.contains("linear type: false"), "{out}");
}

#[test]
fn exit_codes() {
    assert_eq!(lintype(&["milnor", "--setting", "affine", "--expr", "x^"]).0, 1);
    assert_eq!(lintype(&["milnor", "--setting", "projective", "--expr", "x^2 + y"]).0, 1);
    assert_eq!(lintype(&["analyze", "--setting", "affine", "corpus/affine_surface.poly"]).0, 2);
    assert_eq!(lintype(&["genus", "--setting", "projective", "--expr", "x^4 + y^4 + z^4"]).0, 2);
    assert_ne!(lintype(&["analyze", "--setting", "affine"]).0, 0);
    assert_ne!(lintype(&["frobnicate"]).0, 0);
}

#[test]
fn json_to_file() {
    let dir = std::env::temp_dir().join(format!("lintype-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let (code, out, _) = lintype(&[
        "genus",
        "--setting",
        "projective",
        "--assert-irreducible",
        "--expr",
        "x^2*y^2 + y^2*z^2 + z^2*x^2 - 2*x*y*z*(x + y + z)",
        "--json",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0, "{out}");
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert!(v["genus"].is_u64());
    std::fs::remove_dir_all(dir).unwrap();
}
