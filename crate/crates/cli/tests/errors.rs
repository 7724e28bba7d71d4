mod common;

use std::fs;

use common::fixture_path;
use rccs_cli::{run, EXIT_BUDGET, EXIT_FALSE, EXIT_INFEASIBLE, EXIT_MALFORMED};

fn write_space(dir: &tempfile::TempDir, name: &str, body: &str) -> String {
    let path = dir.path().join(name);
    fs::write(&path, body).unwrap();
    path.display().to_string()
}

#[test]
fn unreduced_weight_is_named_in_the_diagnostic() {
    let dir = tempfile::tempdir().unwrap();
    let p = write_space(
        &dir,
        "bad.json",
        r#"{"atoms":[{"label":"w1","weight":"2/8"},{"label":"w2","weight":"3/4"}],
            "events":{"A":["w1"],"B":["w2"]}}"#,
    );
    let out = run(["rccs", "analyze", "--space", &p]);
    assert_eq!(out.code, EXIT_MALFORMED);
    assert!(out.stderr.contains("w1"), "{}", out.stderr);
    assert!(out.stderr.contains("lowest terms"), "{}", out.stderr);
}

#[test]
fn weights_not_summing_to_one_are_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let p = write_space(
        &dir,
        "bad.json",
        r#"{"atoms":[{"label":"w1","weight":"1/4"},{"label":"w2","weight":"1/4"}],
            "events":{"A":["w1"],"B":["w2"]}}"#,
    );
    let out = run(["rccs", "analyze", "--space", &p]);
    assert_eq!(out.code, EXIT_MALFORMED);
    assert!(out.stderr.contains("expected 1"), "{}", out.stderr);
}

#[test]
fn unknown_event_name_is_malformed_input() {
    let f8 = fixture_path("f8");
    let out = run([
        "rccs",
        "check",
        "--space",
        f8.to_str().unwrap(),
        "--model",
        "ghr",
        "--partition",
        "D",
    ]);
    assert_eq!(out.code, EXIT_MALFORMED);
    assert!(out.stderr.contains("\"D\""), "{}", out.stderr);
}

#[test]
fn missing_file_is_malformed_input() {
    let out = run(["rccs", "analyze", "--space", "/nonexistent/space.json"]);
    assert_eq!(out.code, EXIT_MALFORMED);
}

#[test]
fn bad_flags_are_malformed_input() {
    let s4 = fixture_path("s4");
    let s4 = s4.to_str().unwrap();
    assert_eq!(
        run(["rccs", "analyze", "--space", s4, "--epsilon", "1/0"]).code,
        EXIT_MALFORMED
    );
    assert_eq!(
        run(["rccs", "search", "--space", s4, "--model", "xyz"]).code,
        EXIT_MALFORMED
    );
    assert_eq!(
        run(["rccs", "search", "--space", s4, "--model", "hr", "--sizes", "3"]).code,
        EXIT_MALFORMED
    );
    assert_eq!(
        run(["rccs", "analyze", "--space", s4, "--pair", "A"]).code,
        EXIT_MALFORMED
    );
    assert_eq!(
        run([
            "rccs",
            "construct",
            "--space",
            s4,
            "--model",
            "fork",
            "--size",
            "2",
            "--epsilon",
            "0"
        ])
        .code,
        EXIT_MALFORMED
    );
}

#[test]
fn fork_takes_a_single_cause() {
    let f8 = fixture_path("f8");
    let out = run([
        "rccs",
        "check",
        "--space",
        f8.to_str().unwrap(),
        "--model",
        "fork",
        "--partition",
        "C,notC",
    ]);
    assert_eq!(out.code, EXIT_MALFORMED);
}

#[test]
fn check_without_model_needs_the_file_sections() {
    let f8 = fixture_path("f8");
    let out = run([
        "rccs",
        "check",
        "--space",
        f8.to_str().unwrap(),
        "--partition",
        "C",
    ]);
    assert_eq!(out.code, EXIT_MALFORMED);
    assert!(out.stderr.contains("--model"));
}

#[test]
fn infeasible_construction_cites_the_product_bound() {
    let s4 = fixture_path("s4");
    let out = run([
        "rccs",
        "construct",
        "--space",
        s4.to_str().unwrap(),
        "--model",
        "gm",
        "--size",
        "3",
        "--epsilon",
        "-1/4",
    ]);
    assert_eq!(out.code, EXIT_INFEASIBLE);
    assert!(out.stderr.contains("ε + p(A)p(B) ≤ 0"), "{}", out.stderr);
}

#[test]
fn infeasible_admissible_profile_exits_3() {
    let out = run([
        "rccs",
        "admissible",
        "--prob-a",
        "1/2",
        "--prob-b",
        "1/2",
        "--epsilon",
        "-1/4",
        "--deviation",
        "1/20",
        "--size",
        "2",
    ]);
    assert_eq!(out.code, EXIT_INFEASIBLE, "{}", out.stderr);
}

#[test]
fn sampler_without_a_hit_exits_1() {
    let out = run([
        "rccs",
        "admissible",
        "--prob-a",
        "1/2",
        "--prob-b",
        "1/2",
        "--epsilon",
        "-1/4",
        "--deviation",
        "1/20",
        "--size",
        "2",
        "--trials",
        "200",
    ]);
    assert_eq!(out.code, EXIT_FALSE, "{}", out.stderr);
    assert!(out.stdout.contains("\"set\": null"));
}

#[test]
fn oversized_search_exceeds_the_budget() {
    let dir = tempfile::tempdir().unwrap();
    let atoms: Vec<String> = (1..=13)
        .map(|i| format!(r#"{{"label":"w{i}","weight":"1/13"}}"#))
        .collect();
    let body = format!(
        r#"{{"atoms":[{}],"events":{{"A":["w1","w2"],"B":["w2","w3"]}}}}"#,
        atoms.join(",")
    );
    let p = write_space(&dir, "big.json", &body);
    let out = run(["rccs", "search", "--space", &p, "--model", "ghr"]);
    assert_eq!(out.code, EXIT_BUDGET, "{}", out.stderr);
    assert!(out.stderr.contains("10000000"), "{}", out.stderr);
}

#[test]
fn help_exits_zero() {
    let out = run(["rccs", "--help"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("construct"));
}
