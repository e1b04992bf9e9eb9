mod common;

use std::path::Path;

use common::run_json;
use serde_json::Value;

fn check(schema_file: &str, doc: &Value) {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("schemas").join(schema_file);
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap_or_else(|e| panic!("{schema_file}: {e}"));
    let errors: Vec<String> = validator.iter_errors(doc).map(|e| format!("{} at {}", e, e.instance_path)).collect();
    assert!(errors.is_empty(), "{schema_file}: {errors:#?}\n{doc:#}");
}

#[test]
fn every_document_matches_its_schema() {
    let cases: &[(&str, &[&str])] = &[
        ("group-info.json", &["group-info", "--group", "sym:3"]),
        ("group-info.json", &["group-info", "--group", "pruefer:2"]),
        ("sindex.json", &["sindex", "--group", "cyclic:6", "--subset", "e,g"]),
        ("stable-subset.json", &["stable-subset", "--group", "cyclic:6", "--subset", "e,g"]),
        ("stable-subset.json", &["stable-subset", "--group", "cyclic:4", "--subset", "e,g"]),
        ("stable-group.json", &["stable-group", "--group", "quaternion:8"]),
        ("stable-group.json", &["stable-group", "--group", "cyclic:8"]),
        ("stable-group.json", &["--budget", "2", "stable-group", "--group", "cyclic:7"]),
        ("scan.json", &["scan", "--max-order", "6"]),
        ("delta.json", &["delta", "--group", "z", "--set", "1,-1,2,-2"]),
        ("delta.json", &["delta", "--group", "dihedral:4", "--subset", "e,r"]),
        ("witness.json", &["witness", "--family", "free:2", "--case", "infinite-cyclic"]),
        ("witness.json", &["witness", "--family", "pruefer:3", "--case", "noncube", "--h", "1/3", "--f", "1/9"]),
        ("case-analysis.json", &["witness", "--family", "dinf", "--case", "auto"]),
        ("case-analysis.json", &["witness", "--family", "eab2inf", "--case", "auto"]),
        ("construct.json", &["construct", "--group", "z", "--set", "1,-1,2,-2,3,-3,7,-7", "--steps", "6"]),
        ("verify-lemmas.json", &["verify-lemmas", "--bridge-max-order", "6"]),
        ("cross-validate.json", &["cross-validate", "--group", "cyclic:6"]),
    ];
    for (schema, args) in cases {
        let (_, doc) = run_json(args);
        check(schema, &doc);
    }
    let (_, delta) = run_json(&["delta", "--group", "cyclic:6", "--subset", "e,g"]);
    check("extremal.json", &delta["report"]);
}

#[test]
fn schemas_reject_malformed_documents() {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("schemas/sindex.json");
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    let (_, mut doc) = run_json(&["sindex", "--group", "cyclic:4", "--subset", "e,g"]);
    assert!(validator.is_valid(&doc));
    doc["lower"] = Value::from("two");
    assert!(!validator.is_valid(&doc));
}
