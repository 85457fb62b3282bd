//! End-to-end tests of the command-line binary: exit codes, JSON shape
//! and byte-for-byte determinism.

use std::process::{Command, Output};

fn liecoh(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_liecoh"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn torsion_presentation_json() {
    let out = liecoh(&["present", "G2", "--prime", "2", "--torsion", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["group"], "G2");
    assert_eq!(v["coefficient"], 2);
    let relations: Vec<&str> = v["relations"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r.as_str().unwrap())
        .collect();
    assert!(relations.contains(&"x6^2"));
    assert!(relations.contains(&"rho3^2 + x6"));
    assert_eq!(v["graded_dims"]["6"], 1);
    assert_eq!(v["graded_dims"]["9"], 1);
}

#[test]
fn chow_and_free_presentations() {
    let out = liecoh(&["present", "E8", "--chow"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["coefficient"], 0);
    assert_eq!(v["relations"][0], "2*x6");

    let out = liecoh(&["present", "E8", "--free"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["square_annotations"]["rho23"], "x6^6*x10");
}

#[test]
fn table_e8_has_249_entries_with_free_top() {
    let out = liecoh(&["table", "E8", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let entries = v["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 249);
    let top = &entries[248];
    assert_eq!(top["free"], 1);
    assert!(top["torsion"].as_object().unwrap().is_empty());
}

#[test]
fn dims_output_is_deterministic() {
    let a = liecoh(&["dims", "F4", "--prime", "2", "--image"]);
    let b = liecoh(&["dims", "F4", "--prime", "2", "--image"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(v["6"], 1);
}

#[test]
fn verify_is_seed_deterministic() {
    let args = ["verify", "koszul", "--seed", "11", "--trials", "5", "--format", "json"];
    let a = liecoh(&args);
    let b = liecoh(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn weyl_reports_match() {
    let out = liecoh(&["weyl", "F4"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["order"], 1152);
    assert_eq!(v["max_length"], 24);
}

#[test]
fn exit_codes() {
    // Usage errors exit 2.
    assert_eq!(liecoh(&["present"]).status.code(), Some(2));
    assert_eq!(liecoh(&["present", "Q9", "--prime", "2"]).status.code(), Some(2));
    assert_eq!(
        liecoh(&["present", "Spin(9)", "--prime", "2"]).status.code(),
        Some(2),
        "Spin groups need the explicit cup-length flag"
    );
    // The flag unlocks Spin groups.
    let out = liecoh(&["present", "Spin(9)", "--prime", "2", "--assume-spin-log2"]);
    assert!(out.status.success());
    // A Weyl cap that is too small is a usage error, not a crash.
    assert_eq!(liecoh(&["weyl", "E7"]).status.code(), Some(2));
    // Unknown verify suite is a usage error; a clean suite exits 0.
    assert_eq!(liecoh(&["verify", "nope"]).status.code(), Some(2));
    let ok = liecoh(&["verify", "liedata"]);
    assert_eq!(ok.status.code(), Some(0));
}

#[test]
fn dump_tables_is_valid_json() {
    let out = liecoh(&["dump-tables"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(v.to_string().contains("E8"));
}
