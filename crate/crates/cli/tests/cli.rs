use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_avoid321"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn schema(name: &str) -> serde_json::Value {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../schemas")
        .join(name);
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn assert_valid(schema_file: &str, json: &str) {
    let validator = jsonschema::validator_for(&schema(schema_file)).unwrap();
    let instance: serde_json::Value = serde_json::from_str(json).unwrap();
    let errors: Vec<String> = validator
        .iter_errors(&instance)
        .map(|e| e.to_string())
        .collect();
    assert!(errors.is_empty(), "{schema_file}: {errors:?}");
}

#[test]
fn enumerate_text() {
    assert_eq!(
        stdout(&["enumerate", "6", "--class", "simple"]),
        "351624 {1,3,1}\n"
    );
    assert_eq!(stdout(&["enumerate", "3"]), "123\n132\n213\n");
    let ten = stdout(&["enumerate", "10", "--class", "simple"]);
    assert_eq!(ten.lines().count(), 3);
    assert!(ten.contains("468192(10)357 {1,3,5,3,1}\n"));
}

#[test]
fn enumerate_rejects_out_of_range() {
    for n in ["0", "17"] {
        let out = run(&["enumerate", n]);
        assert_eq!(out.status.code(), Some(2));
        assert!(out.stdout.is_empty());
        assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
    }
}

#[test]
fn enumerate_csv_and_json() {
    let csv = stdout(&["enumerate", "6", "--class", "simple", "--format", "csv"]);
    assert_eq!(
        csv,
        "involution,kind,crossing_sequence\n351624,simple,\"{1,3,1}\"\n"
    );
    let json = stdout(&["enumerate", "8", "--format", "json"]);
    assert_valid("enumerate.schema.json", &json);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["count"], 70);
    assert_eq!(v["items"].as_array().unwrap().len(), 70);
}

#[test]
fn coeffs_tables() {
    let f: Vec<String> = stdout(&["coeffs", "f", "8"])
        .lines()
        .map(|l| l.split(' ').nth(1).unwrap().to_string())
        .collect();
    assert_eq!(f, ["1", "2", "3", "6", "10", "20", "35", "70"]);
    let phi = stdout(&["coeffs", "phi", "7", "--format", "csv"]);
    assert_eq!(phi, "n,coefficient\n1,1\n2,2\n3,3\n4,6\n5,10\n6,19\n7,33\n");
    let delta = stdout(&["coeffs", "delta", "14", "--format", "json"]);
    assert_valid("coeffs.schema.json", &delta);
    let v: serde_json::Value = serde_json::from_str(&delta).unwrap();
    let c: Vec<&str> = v["coefficients"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_str().unwrap())
        .collect();
    assert_eq!(
        c,
        ["0", "0", "0", "0", "0", "0", "0", "3", "0", "10", "0", "35", "0", "116"]
    );
}

#[test]
fn coeffs_large_values_are_exact() {
    let out = stdout(&["coeffs", "f", "60"]);
    assert_eq!(out.lines().last().unwrap(), "60 118264581564861424");
    assert!(!run(&["coeffs", "psi", "5"]).status.success());
    assert!(!run(&["coeffs", "f", "0"]).status.success());
}

#[test]
fn verify_suites() {
    let out = run(&["verify", "--suite", "series", "--order", "40"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("central-binomial"));
    assert!(text.contains("epsilon-closed-form          discrepancy-documented"));

    let json = stdout(&[
        "verify", "--suite", "paths", "--max-n", "14", "--format", "json",
    ]);
    assert_valid("verify.schema.json", &json);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    for c in v["checks"].as_array().unwrap() {
        assert_ne!(c["status"], "fail", "{c}");
    }

    let structure = stdout(&["verify", "--suite", "structure", "--max-n", "14"]);
    assert!(structure.contains("doubling-law                 pass"));
    assert!(structure.contains("separable-intersection       discrepancy-documented"));

    assert_eq!(run(&["verify", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--max-n", "40"]).status.code(), Some(2));
}

#[test]
fn convert_forms() {
    assert_eq!(
        stdout(&["convert", "351624", "--to", "sequence"]),
        "{1,3,1}\n"
    );
    assert_eq!(
        stdout(&["convert", "UUDUDD", "--to", "involution"]),
        "351624\n"
    );
    assert_eq!(
        stdout(&["convert", "{1,3,5,3,1}", "--to", "involution"]),
        "468192(10)357\n"
    );
    assert_eq!(stdout(&["convert", "{13531}", "--to", "motzkin"]), "UUDD\n");
    assert_eq!(stdout(&["convert", "351624", "--to", "dyck"]), "UUDUDD\n");
    assert_eq!(
        stdout(&["convert", "4,3,2,1", "--to", "motzkin"]),
        "UUD:2D\n"
    );
    assert_eq!(
        stdout(&["convert", "UUD:2D", "--to", "involution"]),
        "4321\n"
    );
    assert_eq!(stdout(&["convert", "{1,3,1}", "--to", "dyck"]), "UUDUDD\n");
    assert!(stdout(&["convert", "351624", "--to", "svg"]).starts_with("<svg"));
    assert!(stdout(&["convert", "UHD", "--to", "svg"]).contains("<polyline"));
    assert_eq!(
        run(&["convert", "321", "--to", "dyck"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["convert", "{1,1}", "--to", "involution"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["convert", "2x1", "--to", "involution"]).status.code(),
        Some(2)
    );
}

#[test]
fn output_is_deterministic() {
    let a = stdout(&["enumerate", "12", "--format", "json"]);
    let b = stdout(&["enumerate", "12", "--format", "json"]);
    assert_eq!(a, b);
}
