use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn spinh(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spinh"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = spinh(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    serde_json::from_str(&stdout(&full)).expect("valid json")
}

fn schema(name: &str) -> Value {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "schemas", &format!("{name}.json")]
        .iter()
        .collect();
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn assert_schema(name: &str, instance: &Value) {
    let validator = jsonschema::draft202012::new(&schema(name)).expect("schema compiles");
    let errors: Vec<String> = validator
        .iter_errors(instance)
        .map(|e| format!("{} at {}", e, e.instance_path))
        .collect();
    assert!(errors.is_empty(), "{name}: {errors:?}");
}

#[test]
fn classify_clh6_is_quaternionic_8() {
    assert_eq!(stdout(&["classify", "--n", "6", "--variant", "Clh"]).trim(), "H(8)");
    let v = json(&["classify", "--n", "6", "--variant", "Clh"]);
    assert_eq!(v["display"], "H(8)");
    assert_eq!(v["descriptor"]["size"], 8);
}

#[test]
fn genus_orientations() {
    let plus = json(&["genus", "--sig", "1", "--euler", "3", "--orientation", "+"]);
    assert_eq!(plus["genus"], "2");
    let minus = json(&["genus", "--sig", "1", "--euler", "3", "--orientation", "-"]);
    assert_eq!(minus["genus"], "-1");
}

#[test]
fn hp_table_small_matrix() {
    let v = json(&["hp-table", "--max-i", "2", "--max-j", "2"]);
    let expected: Value = serde_json::from_str("[[1,0,0],[2,1,0],[3,4,1]]").unwrap();
    assert_eq!(v["matrix"], expected);
    for method in ["residue", "chebyshev"] {
        let w = json(&["hp-table", "--max-i", "2", "--max-j", "2", "--method", method]);
        assert_eq!(w["matrix"], expected, "{method}");
    }
}

#[test]
fn hp_table_tsv_has_header() {
    let tsv = stdout(&["hp-table", "--max-i", "1", "--max-j", "1", "--format", "tsv"]);
    let first = tsv.lines().next().unwrap();
    assert!(first.starts_with("i\\j\t"), "{first}");
    assert_eq!(tsv.lines().count(), 3);
}

#[test]
fn output_is_deterministic() {
    let cases: [&[&str]; 4] = [
        &["hp-table", "--max-i", "6", "--max-j", "6", "--format", "json"],
        &["steenrod", "verify-bspinh", "--max-degree", "12", "--format", "json"],
        &["ktable", "--theory", "KO", "--coeff", "Q/Z", "--range", "0..16"],
        &["dual", "--group", "Z+Z2+Z4", "--format", "json"],
    ];
    for args in cases {
        let a = spinh(args);
        let b = spinh(args);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn exit_codes() {
    assert_eq!(spinh(&["classify", "--n", "3"]).status.code(), Some(0));
    assert_eq!(spinh(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(spinh(&["classify"]).status.code(), Some(2));

    let domain = spinh(&["zk-index", "--n", "7", "--k", "2", "--integral", "0", "--eta", "0"]);
    assert_eq!(domain.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&domain.stderr).starts_with("error[ktheory]"));

    let capped = spinh(&["steenrod", "wu", "--max-degree", "40"]);
    assert_eq!(capped.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&capped.stderr).starts_with("error[cap]"));
}

#[test]
fn json_outputs_match_schemas() {
    let cases: [(&str, &[&str]); 11] = [
        ("classify", &["classify", "--r", "2", "--s", "1"]),
        ("dims", &["dims", "--n", "5", "--field", "C"]),
        ("ngroup", &["ngroup", "--n", "6", "--field", "H"]),
        ("genus", &["genus", "--sig", "-3", "--euler", "5", "--orientation", "-"]),
        ("hp-table", &["hp-table", "--max-i", "3", "--max-j", "4"]),
        ("steenrod-sq", &["steenrod", "sq", "--k", "2", "--poly", "w2*w3"]),
        ("steenrod-wu", &["steenrod", "wu", "--max-degree", "8"]),
        ("steenrod-verify-bspinh", &["steenrod", "verify-bspinh", "--max-degree", "10"]),
        ("ktable", &["ktable", "--theory", "KSp", "--coeff", "Z2", "--range", "0..=8"]),
        ("zk-index", &["zk-index", "--n", "8", "--k", "3", "--integral", "6", "--eta", "0"]),
        ("dual", &["dual", "--group", "Z+Z6"]),
    ];
    for (name, args) in cases {
        assert_schema(name, &json(args));
    }
}

#[test]
fn schemas_reject_wrong_shapes() {
    let mut v = json(&["genus", "--sig", "1", "--euler", "3", "--orientation", "+"]);
    v["orientation"] = Value::from("sideways");
    let validator = jsonschema::draft202012::new(&schema("genus")).unwrap();
    assert!(!validator.is_valid(&v));
}
