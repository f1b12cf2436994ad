//! Black-box tests of the command-line front end: exit codes, schema
//! fields, determinism, config merging, and the DOT companion file.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rigcat"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn clean_example_checks_out_with_schema_one() {
    let out = run(&["check", "--example", "bool-rig", "--samples", "40"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = stdout_json(&out);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["example"], "bool-rig");
    assert_eq!(v["axioms"]["ok"], true);
    assert_eq!(v["colimit_laws"]["ok"], true);
}

#[test]
fn corrupted_fixture_fails_with_axiom_exit_code() {
    let out = run(&["check", "--example", "corrupted-fixture"]);
    assert_eq!(out.status.code(), Some(1));
    let v = stdout_json(&out);
    assert_eq!(v["axioms"]["ok"], false);
    assert!(v["axioms"]["violations"].as_array().is_some_and(|a| !a.is_empty()));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(run(&["check", "--example", "no-such-example"]).status.code(), Some(2));
    assert_eq!(run(&["check"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["check", "--example", "z2", "--count", "not-a-number"]).status.code(), Some(2));
}

#[test]
fn identical_configuration_gives_byte_identical_output() {
    let args = ["check", "--example", "z2", "--samples", "60", "--seed", "7"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn completion_export_lists_level_zero() {
    let out = run(&["complete", "--example", "z2", "--count", "16"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["schema"], 1);
    assert!(v["level0"]["objects"].as_array().is_some_and(|a| !a.is_empty()));
    assert!(v["level0"]["morphisms"].as_array().is_some_and(|a| !a.is_empty()));
}

#[test]
fn component_ring_of_the_cyclic_rig_has_two_classes() {
    let out = run(&["pi0", "--example", "z2"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = stdout_json(&out);
    assert_eq!(v["classes"].as_array().unwrap().len(), 2);
    assert_eq!(v["stabilized"], true);
    assert_eq!(v["ring_axioms"]["ok"], true);
    assert!(v["classes"].as_array().unwrap().iter().all(|c| c["inverse_witness_verified"] == true));
}

#[test]
fn component_ring_of_the_idempotent_rig_is_trivial() {
    let out = run(&["pi0", "--example", "bool-rig"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = stdout_json(&out);
    assert_eq!(v["classes"].as_array().unwrap().len(), 1);
    assert_eq!(v["zero_class"], v["one_class"]);
}

#[test]
fn dot_companion_lands_next_to_the_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ring.json");
    let out = run(&[
        "pi0",
        "--example",
        "z2",
        "--emit-dot",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let dot = std::fs::read_to_string(path.with_extension("dot")).expect("dot file written");
    assert!(dot.starts_with("digraph"));
    assert!(dot.contains("->"));
    let body: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(body["schema"], 1);
}

#[test]
fn config_file_supplies_defaults_and_flags_override_it() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.json");
    std::fs::write(&cfg, r#"{"example": "z2", "seed": 9, "samples": 50}"#).unwrap();
    let from_file = run(&["check", "--config", cfg.to_str().unwrap()]);
    assert_eq!(from_file.status.code(), Some(0));
    let v = stdout_json(&from_file);
    assert_eq!(v["example"], "z2");
    assert_eq!(v["seed"], 9);

    let overridden = run(&[
        "check",
        "--config",
        cfg.to_str().unwrap(),
        "--example",
        "bool-rig",
        "--seed",
        "4",
    ]);
    assert_eq!(overridden.status.code(), Some(0));
    let w = stdout_json(&overridden);
    assert_eq!(w["example"], "bool-rig");
    assert_eq!(w["seed"], 4);
}

#[test]
fn pair_model_comparison_reports_a_bijection_verdict() {
    let out = run(&["compare-gq", "--example", "f2mod", "--rank-max", "2", "--count", "60"]);
    let v = stdout_json(&out);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["functorial"]["ok"], true);
    for key in ["well_defined", "injective", "surjective", "bijective"] {
        assert!(v["pi0"][key].is_boolean(), "missing verdict field {key}");
    }
    // A verdict is always produced; only a broken functor image is an error.
    assert!(matches!(out.status.code(), Some(0 | 1 | 4)));
}

#[test]
fn text_format_is_human_readable() {
    let out = run(&["check", "--example", "z2", "--format", "text", "--samples", "40"]);
    assert_eq!(out.status.code(), Some(0));
    let s = String::from_utf8_lossy(&out.stdout);
    assert!(s.contains("no violations"));
}
