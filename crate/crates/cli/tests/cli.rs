use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_gradealg"));
    c.env_remove("GRADEALG_CAPS");
    c
}

fn root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn spec(name: &str) -> String {
    root().join("specs").join(format!("{name}.json")).display().to_string()
}

fn schema(name: &str) -> jsonschema::Validator {
    let text = std::fs::read_to_string(root().join("schemas").join(name)).unwrap();
    jsonschema::validator_for(&serde_json::from_str(&text).unwrap()).unwrap()
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

/// Runs with `--json -` and returns the parsed report after checking it
/// against the report schema.
fn report(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--json", "-"]);
    let out = run(&all);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let validator = schema("report.schema.json");
    let errors: Vec<String> = validator.iter_errors(&v).map(|e| format!("{e} at {}", e.instance_path())).collect();
    assert!(errors.is_empty(), "{args:?}: {errors:?}");
    v
}

fn labels(v: &Value) -> Vec<&str> {
    v.as_array().unwrap().iter().map(|x| x.as_str().unwrap()).collect()
}

fn witness<'a>(check: &'a Value, role: &str) -> Vec<&'a str> {
    let items = check["certificate"]["items"].as_array().unwrap();
    let item = items.iter().find(|w| w["role"] == role).unwrap_or_else(|| panic!("no {role} in {check}"));
    labels(&item["labels"])
}

#[test]
fn shipped_specs_match_the_spec_schema() {
    let validator = schema("ring-spec.schema.json");
    for entry in std::fs::read_dir(root().join("specs")).unwrap() {
        let path = entry.unwrap().path();
        let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
        let errors: Vec<String> = validator.iter_errors(&v).map(|e| e.to_string()).collect();
        assert!(errors.is_empty(), "{}: {errors:?}", path.display());
    }
}

#[test]
fn validate_fx1_components() {
    let v = report(&["validate", "--spec", &spec("fx1")]);
    let sizes: Vec<u64> =
        v["result"]["components"].as_array().unwrap().iter().map(|c| c["size"].as_u64().unwrap()).collect();
    assert_eq!(sizes, [4, 1, 4, 1]);
    let zero: Vec<bool> =
        v["result"]["components"].as_array().unwrap().iter().map(|c| c["zero"].as_bool().unwrap()).collect();
    assert_eq!(zero, [false, true, false, true]);
    assert_eq!(v["result"]["unity"], "(1 0;0 1)");
}

#[test]
fn validate_rejects_overlapping_components() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(
        &path,
        r#"{"group": {"cyclic": 2}, "ring": {"modular": 4}, "grading": {"components": {"0": [0, 1, 2, 3], "1": [2]}}}"#,
    )
    .unwrap();
    let out = run(&["validate", "--spec", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("direct sum") && err.contains("2 lies in"), "{err}");
}

#[test]
fn validate_rejects_idealization_over_a_nonabelian_group() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s3.json");
    std::fs::write(
        &path,
        r#"{"group": {"symmetric": 3}, "ring": {"idealization": {"ring": {"ring": {"modular": 2}}, "module": "regular"}}, "grading": "induced"}"#,
    )
    .unwrap();
    let out = run(&["validate", "--spec", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("abelian"));
}

#[test]
fn input_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("typo.json");
    std::fs::write(&path, "{\"group\": {\"cyclic\": 2},\n \"ring\": {\"modula\": 4}}").unwrap();
    let out = run(&["validate", "--spec", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));

    let out = run(&["check", "prime", "--spec", &spec("fx5"), "--ideal", "(9 9)"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["radicals"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn elements_table() {
    let v = report(&["elements", "--spec", &spec("fx5")]);
    let rows = v["result"]["elements"].as_array().unwrap();
    assert_eq!(rows.len(), 8);
    let row = rows.iter().find(|r| r["label"] == "(0 2;0 0)").unwrap();
    assert_eq!(row["degree"], "2");
    let mixed = rows.iter().find(|r| r["label"] == "(1 2;0 0)").unwrap();
    assert!(mixed["degree"].is_null());
}

#[test]
fn ideal_lattices() {
    assert_eq!(report(&["ideals", "--graded", "--spec", &spec("fx5")])["result"]["count"], 5);
    assert_eq!(report(&["ideals", "--graded", "--maximal", "--spec", &spec("fx4")])["result"]["count"], 7);
    let fx1 = report(&["ideals", "--graded", "--spec", &spec("fx1")]);
    assert_eq!(fx1["result"]["count"], 2);
    assert_eq!(fx1["result"]["covers"], serde_json::json!([[0, 1]]));
    let left = report(&["ideals", "--sidedness", "left", "--spec", &spec("fx1")]);
    assert!(left["result"]["count"].as_u64().unwrap() > 2);
}

#[test]
fn check_fx5_weakly_prime() {
    let v = report(&["check", "weakly-prime", "--spec", &spec("fx5"), "--ideal", "(0 2)"]);
    assert_eq!(v["result"]["verdict"], "pass");
    assert_eq!(v["result"]["ideal"]["size"], 2);
    let v = report(&["check", "prime", "--spec", &spec("fx5"), "--ideal", "(0 2)"]);
    assert_eq!(v["result"]["verdict"], "fail");
}

#[test]
fn check_fx2_weakly_prime_fails_with_witness() {
    let v = report(&["check", "weakly-prime", "--spec", &spec("fx2"), "--ideal", "(1,0,0),(0,0,1)"]);
    assert_eq!(v["result"]["verdict"], "fail");
    let check = &v["result"]["check"];
    assert_eq!(witness(check, "I"), ["(0,1,0)", "(1,0,0)"]);
    assert_eq!(witness(check, "IJ"), ["(1,0,0)"]);
}

#[test]
fn check_fx6_weakly_total_prime_fails() {
    let v = report(&["check", "weakly-total-prime", "--spec", &spec("fx6"), "--ideal", "2·E11,2·E12,2·E21,2·E22"]);
    assert_eq!(v["result"]["ideal"]["size"], 256);
    assert_eq!(v["result"]["verdict"], "fail");
    let check = &v["result"]["check"];
    let (x, y, xy) = (witness(check, "x")[0], witness(check, "y")[0], witness(check, "xy")[0]);
    assert_eq!((x, y, xy), ("(0 0;0 1)", "(0 1;2 0)", "(0 0;2 0)"));
    let v = report(&["check", "prime", "--spec", &spec("fx6"), "--ideal", "2*E11"]);
    assert_eq!(v["result"]["verdict"], "pass");
}

#[test]
fn check_dual_predicates() {
    let v = report(&["check", "all-weakly-prime", "--spec", &spec("fx4")]);
    assert_eq!(v["result"]["verdict"], "pass");
    assert_eq!(v["result"]["via_characterization"]["verdict"], "pass");
    let v = report(&["check", "all-weakly-total-prime", "--spec", &spec("fx11")]);
    assert_eq!(v["result"]["verdict"], "fail");
    assert_eq!(v["result"]["via_characterization"]["verdict"], "fail");
}

#[test]
fn check_degree_and_set_predicates() {
    let v = report(&["check", "g-weakly-total-prime", "--spec", &spec("fx5"), "--ideal", "(0 2)", "--degree", "0"]);
    assert_eq!(v["result"]["verdict"], "pass");
    assert_eq!(v["result"]["degree"], "0");
    let v = report(&["check", "g-weakly-total-prime", "--spec", &spec("fx5"), "--ideal", "(0 2)", "--degree", "2"]);
    assert_eq!(v["result"]["verdict"], "inapplicable");
    let v = report(&["check", "weakly-system", "--spec", &spec("fx9"), "--set", "(1,1)"]);
    assert_eq!(v["result"]["verdict"], "pass");
    let out = run(&["check", "g-total-prime", "--spec", &spec("fx5"), "--ideal", "(0 2)"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn radicals_fx5() {
    let v = report(&["radicals", "--spec", &spec("fx5")]);
    let r = &v["result"];
    assert_eq!(r["gn"]["size"], 4);
    assert_eq!(r["gp"]["ideal"]["size"], 4);
    assert_eq!(r["gn_square_zero"], true);
    assert_eq!(r["gp_equals_gn"], true);
}

#[test]
fn gw_fx5() {
    let v = report(&["gw", "--spec", &spec("fx5"), "--ideal", "(0 2)"]);
    let r = &v["result"];
    assert_eq!(labels(&r["by_intersection"]["ideal"]["members"]), ["(0 0;0 0)", "(0 2;0 0)"]);
    assert_eq!(labels(&r["by_systems"]["set"]), ["(0 0;0 0)", "(0 2;0 0)"]);
    assert_eq!(r["agree"], true);
}

#[test]
fn twin_zeros_fx5() {
    let v = report(&["twin-zeros", "--spec", &spec("fx5"), "--ideal", "(0 2)"]);
    let pairs = v["result"]["pairs"].as_array().unwrap();
    assert!(pairs.iter().any(|p| p["x"] == "(2 0;0 0)" && p["y"] == "(2 0;0 0)"));
    assert_eq!(v["result"]["premise"], true);
    let v = report(&["twin-zeros", "--spec", &spec("fx5"), "--ideal", "(0 2)", "--degree", "0"]);
    assert_eq!(v["result"]["pairs"][0]["kind"], "g-total");
}

#[test]
fn caps_from_flags_and_environment() {
    let out = run(&["ideals", "--graded", "--spec", &spec("fx5"), "--cap-lattice", "4"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap exceeded"));
    let out =
        bin().args(["ideals", "--graded", "--spec", &spec("fx5")]).env("GRADEALG_CAPS", "lattice=4").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out =
        bin().args(["gw", "--spec", &spec("fx1"), "--ideal", "0"]).env("GRADEALG_CAPS", "systems=2").output().unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("cap exceeded"));
}

#[test]
fn fixture_specs_reproduce_the_registry() {
    let listing = report(&["corpus", "--max-order", "1"]);
    let names: Vec<String> = listing["result"]["rings"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["name"].as_str().unwrap().to_string())
        .collect();
    let dir = tempfile::tempdir().unwrap();
    for i in (1..=11).filter(|&i| i != 6) {
        let id = format!("FX{i}: ");
        let name = names.iter().find(|n| n.starts_with(&id)).unwrap();
        let emitted = report(&["corpus", "--max-order", "1", "--emit", name]);
        let path = dir.path().join(format!("fx{i}.json"));
        std::fs::write(&path, emitted["result"]["spec"].to_string()).unwrap();
        let a = report(&["validate", "--spec", path.to_str().unwrap()]);
        let b = report(&["validate", "--spec", &spec(&format!("fx{i}"))]);
        assert_eq!(a["input_digest"], b["input_digest"], "{name}");
    }
    let out = run(&["corpus", "--max-order", "1", "--emit", names.iter().find(|n| n.starts_with("FX6")).unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn spec_round_trip_keeps_the_digest() {
    let dir = tempfile::tempdir().unwrap();
    let validator = schema("ring-spec.schema.json");
    for name in ["fx1", "fx2", "fx3", "fx5", "fx7", "fx8", "fx10"] {
        let table = dir.path().join(format!("{name}.json"));
        let first = report(&["validate", "--spec", &spec(name), "--canonical", table.to_str().unwrap()]);
        let text = std::fs::read_to_string(&table).unwrap();
        assert!(validator.is_valid(&serde_json::from_str(&text).unwrap()), "{name}");
        let again = report(&["validate", "--spec", table.to_str().unwrap()]);
        assert_eq!(first["input_digest"], again["input_digest"], "{name}");
        assert_eq!(first["result"], again["result"], "{name}");
    }
}

#[test]
fn reports_are_deterministic_modulo_timings() {
    let strip = |mut v: Value| {
        v.as_object_mut().unwrap().remove("timings");
        v.to_string()
    };
    for args in
        [vec!["ideals", "--graded", "--spec"], vec!["radicals", "--spec"], vec!["check", "all-weakly-prime", "--spec"]]
    {
        let mut a = args.clone();
        let s = spec("fx3");
        a.push(&s);
        assert_eq!(strip(report(&a)), strip(report(&a)), "{a:?}");
    }
}
