mod common;

use std::process::Command;

use common::{run, run_json};
use serde_json::json;

#[test]
fn sindex_of_cyclic_four() {
    let (code, doc) = run_json(&["sindex", "--group", "cyclic:4", "--subset", "0,1"]);
    assert_eq!(code, 0);
    assert_eq!(doc["lower"], 2);
    assert_eq!(doc["upper"], 2);
    assert_eq!(doc["stable"], true);
}

#[test]
fn infinite_cyclic_witness() {
    let (code, doc) = run_json(&["witness", "--family", "z", "--case", "infinite-cyclic", "--n", "3", "--m", "7"]);
    assert_eq!(code, 0);
    assert_eq!(doc["iota"], 1);
    assert_eq!(doc["omega"], 3);
    assert_eq!(doc["isolated_vertex"], "7");
}

#[test]
fn verify_lemmas_passes() {
    let (code, doc) = run_json(&["verify-lemmas"]);
    assert_eq!(code, 0);
    assert_eq!(doc["pass"], true);
    assert_eq!(doc["order32"]["C32"], json!({"involutions": 1, "squares": 16}));
    assert_eq!(doc["order32"]["Q32"], json!({"involutions": 1, "squares": 8}));
}

#[test]
fn unstable_group_and_exit_codes() {
    let (code, doc) = run_json(&["stable-group", "--group", "cyclic:6"]);
    assert_eq!(code, 0);
    assert_eq!(doc["verdict"], "UNSTABLE");
    assert_eq!(doc["witness_A"], json!(["e", "g"]));
    assert_eq!((doc["lower"].as_u64(), doc["upper"].as_u64()), (Some(2), Some(3)));
    let (code, _) = run_json(&["--fail-on-unstable", "stable-group", "--group", "cyclic:6"]);
    assert_eq!(code, 1);
    let (code, doc) = run_json(&["--fail-on-unstable", "stable-group", "--group", "cyclic:7"]);
    assert_eq!((code, doc["verdict"].as_str()), (0, Some("STABLE")));
}

#[test]
fn budget_exhaustion_is_unknown() {
    let (code, doc) = run_json(&["--budget", "3", "stable-group", "--group", "cyclic:7"]);
    assert_eq!(code, 3);
    assert_eq!(doc["verdict"], "UNKNOWN");
    assert_eq!(doc["scanned"], 3);
}

#[test]
fn cap_exceeded_exits_three() {
    let (code, _, err) = run(&["--cap", "1", "sindex", "--group", "cyclic:6", "--subset", "0,1"]);
    assert_eq!(code, 3, "{err}");
}

#[test]
fn invalid_inputs_exit_four() {
    for args in [
        &["sindex", "--group", "cyclic:4", "--subset", "9"][..],
        &["sindex", "--group", "nonsense:4", "--subset", "0"],
        &["sindex", "--group", "z", "--subset", "0"],
        &["delta", "--group", "cyclic:4", "--set", "g"],
        &["delta", "--group", "cyclic:4", "--set", "e"],
        &["witness", "--family", "cyclic:8", "--case", "involution", "--h", "g^4", "--f", "g^2"],
        &["group-info", "--group", "file:/nonexistent/table.txt"],
    ] {
        let (code, out, err) = run(args);
        assert_eq!(code, 4, "{args:?}: {out}{err}");
        assert!(err.starts_with("error: "), "{args:?}: {err}");
    }
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["bogus"][..],
        &["sindex", "--group", "cyclic:4"],
        &["witness", "--family", "z", "--case", "cube"],
        &["witness", "--family", "z", "--case", "sideways"],
        &["--threads", "0", "scan"],
        &["delta", "--group", "cyclic:4", "--set", "g", "--subset", "e"],
    ] {
        let (code, _, err) = run(args);
        assert_eq!(code, 2, "{args:?}: {err}");
    }
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("stable-group"));
}

#[test]
fn search_exhaustion_exits_three() {
    let (code, _, err) = run(&["--prefix", "2", "witness", "--family", "eab2inf", "--case", "auto"]);
    // A prefix of 2 is retried with doubling, so this succeeds.
    assert_eq!(code, 0, "{err}");
    let (code, _, err) = run(&["--steps", "6", "construct", "--group", "cyclic:6", "--set", "g^2,g^4"]);
    assert_eq!(code, 3, "{err}");
}

#[test]
fn case_analysis_documents() {
    for (family, branch) in [
        ("z", "infinite-order"),
        ("pruefer:3", "odd-noncube"),
        ("pruefer:2", "two-group-noncube"),
        ("eab2inf", "two-group-elementary"),
    ] {
        let (code, doc) = run_json(&["witness", "--family", family, "--case", "auto"]);
        assert_eq!(code, 0);
        assert_eq!(doc["branch"], branch);
        assert!(doc["iota"].as_u64() < doc["omega"].as_u64(), "{family}");
    }
}

#[test]
fn subgroup_witnesses_on_finite_groups() {
    let (code, doc) = run_json(&["witness", "--family", "elemabelian:2,3", "--case", "involution", "--h", "(1;0;0),(0;1;0)", "--f", "(0;0;1)"]);
    assert_eq!(code, 0, "{doc}");
    assert_eq!(doc["iota"], 1);
    assert_eq!(doc["params"]["H_order"], 4);
    let (code, doc) = run_json(&["witness", "--family", "pruefer:3", "--case", "noncube", "--h", "1/3", "--f", "1/9"]);
    assert_eq!(code, 0);
    assert_eq!((doc["iota"].as_u64(), doc["omega"].as_u64()), (Some(1), Some(2)));
}

#[test]
fn delta_from_subset_and_set() {
    let (_, from_a) = run_json(&["delta", "--group", "cyclic:6", "--subset", "e,g"]);
    let (_, from_f) = run_json(&["delta", "--group", "cyclic:6", "--set", "g^2,g^3,g^4"]);
    assert_eq!(from_a, from_f);
    assert_eq!(from_a["report"]["max_size"], 2);
    assert_eq!(from_a["report"]["min_maximal_size"], 1);
    let (_, s3) = run_json(&["delta", "--group", "sym:3", "--set", "(12),(123),(132)"]);
    assert_eq!(s3["graph"]["edges"], json!([[1, 2]]));
}

#[test]
fn lattice_labels_with_commas() {
    let (code, doc) = run_json(&["construct", "--group", "z2", "--set", "(1,0),(-1,0)", "--steps", "4"]);
    assert_eq!(code, 0);
    assert_eq!(doc["F"], json!(["(1,0)", "(-1,0)"]));
    assert_eq!(doc["invariant_ok"], true);
}

#[test]
fn group_info() {
    let (_, doc) = run_json(&["group-info", "--group", "quaternion:8"]);
    assert_eq!(doc["order"], 8);
    assert_eq!(doc["involutions"], 1);
    assert_eq!(doc["elements"].as_array().unwrap().len(), 8);
    let (_, doc) = run_json(&["--prefix", "5", "group-info", "--group", "dinf"]);
    assert_eq!(doc["finite"], false);
    assert_eq!(doc["elements"].as_array().unwrap().len(), 5);
}

#[test]
fn table_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("klein.txt");
    std::fs::write(&path, "4\n# e a b c\n0 1 2 3\n1 0 3 2\n2 3 0 1\n3 2 1 0\n").unwrap();
    let group = format!("file:{}", path.display());
    let (code, doc) = run_json(&["sindex", "--group", &group, "--subset", "e,a"]);
    assert_eq!(code, 0);
    assert_eq!(doc["subset"], json!(["e", "a"]));
    assert_eq!((doc["lower"].as_u64(), doc["upper"].as_u64()), (Some(2), Some(2)));
    let (_, scan) = run_json(&["stable-group", "--group", &group]);
    assert_eq!(scan["verdict"], "STABLE");

    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "2\n0 1\n1 1\n").unwrap();
    let (code, _, err) = run(&["group-info", "--group", &format!("file:{}", bad.display())]);
    assert_eq!(code, 4, "{err}");
}

#[test]
fn dot_export() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("delta.dot");
    let (code, _, _) = run(&["--dot", path.to_str().unwrap(), "witness", "--family", "z", "--case", "infinite-cyclic"]);
    assert_eq!(code, 0);
    let dot = std::fs::read_to_string(&path).unwrap();
    assert!(dot.starts_with("graph \"delta\" {"));
    assert_eq!(dot.matches("[label=").count(), 8);
}

#[test]
fn cross_validate_exhaustive_and_sampled() {
    let (code, doc) = run_json(&["cross-validate", "--group", "dihedral:4"]);
    assert_eq!(code, 0);
    assert_eq!(doc["subsets_checked"], 128);
    assert_eq!(doc["exhaustive"], true);
    let (code, doc) = run_json(&["--budget", "10", "cross-validate", "--group", "cyclic:14", "--seed", "4"]);
    assert_eq!(code, 0);
    assert_eq!(doc["subsets_checked"], 10);
    assert_eq!(doc["exhaustive"], false);
}

#[test]
fn deterministic_output_is_byte_identical() {
    let args = ["--deterministic", "--format", "json", "scan", "--max-order", "10"];
    let (_, first, _) = run(&args);
    for _ in 0..3 {
        assert_eq!(run(&args).1, first);
    }
    let parallel = run(&["--threads", "4", "--format", "json", "scan", "--max-order", "10"]).1;
    let strip = |s: &str| {
        let mut v: serde_json::Value = serde_json::from_str(s).unwrap();
        for g in v["groups"].as_array_mut().unwrap() {
            g["elapsed_ms"] = json!(0);
        }
        v
    };
    assert_eq!(strip(&parallel), strip(&first));
}

#[test]
fn binary_exit_status() {
    let bin = env!("CARGO_BIN_EXE_sfactor");
    let out = Command::new(bin).args(["sindex", "--group", "cyclic:4", "--subset", "0,1"]).output().unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("stable: true"));
    let out = Command::new(bin).args(["--fail-on-unstable", "stable-subset", "--group", "cyclic:6", "--subset", "e,g"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let out = Command::new(bin).arg("nope").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}
