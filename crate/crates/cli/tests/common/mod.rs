#![allow(dead_code)]

use std::fs;
use std::path::{Path, PathBuf};

use rccs_cli::{run, Outcome};
use rccs_core::fixtures;

pub fn data_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests")
}

pub fn fixture_path(name: &str) -> PathBuf {
    data_dir().join("fixtures").join(format!("{name}.json"))
}

pub fn golden_path(name: &str) -> PathBuf {
    data_dir().join("golden").join(name)
}

pub fn updating() -> bool {
    std::env::var_os("UPDATE_GOLDEN").is_some()
}

/// Compares `actual` with the committed file, or rewrites it when
/// `UPDATE_GOLDEN` is set.
pub fn compare_golden(name: &str, actual: &str) -> Result<(), String> {
    let path = golden_path(name);
    if updating() {
        fs::create_dir_all(path.parent().unwrap()).unwrap();
        fs::write(&path, actual).unwrap();
        return Ok(());
    }
    let expected = fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    if expected == actual {
        Ok(())
    } else {
        Err(format!(
            "{name} differs from {}\n--- expected\n{expected}\n--- actual\n{actual}",
            path.display()
        ))
    }
}

pub fn fixture_documents() -> Vec<(&'static str, String)> {
    vec![
        ("u4", fixtures::u4().document().to_json()),
        ("f8", fixtures::f8().document().to_json()),
        ("s4", fixtures::s4().document().to_json()),
    ]
}

pub struct Case {
    pub name: &'static str,
    pub args: Vec<String>,
    pub code: i32,
    /// Extra file produced through `--out`, compared as `<name>.out.json`.
    pub writes: bool,
}

fn case(name: &'static str, code: i32, args: &[&str]) -> Case {
    Case {
        name,
        args: args.iter().map(|s| s.to_string()).collect(),
        code,
        writes: false,
    }
}

fn space(name: &str) -> String {
    fixture_path(name).display().to_string()
}

pub fn cases() -> Vec<Case> {
    let u4 = space("u4");
    let f8 = space("f8");
    let s4 = space("s4");
    let mut out = vec![
        case("analyze-u4", 0, &["analyze", "--space", &u4]),
        case("analyze-f8", 0, &["analyze", "--space", &f8]),
        case(
            "analyze-s4",
            0,
            &["analyze", "--space", &s4, "--epsilon", "0"],
        ),
        case(
            "analyze-s4-negative",
            0,
            &["analyze", "--space", &s4, "--epsilon", "-1/4"],
        ),
        case(
            "check-f8-fork",
            0,
            &[
                "check",
                "--space",
                &f8,
                "--model",
                "fork",
                "--partition",
                "C",
            ],
        ),
        case(
            "check-f8-gcc",
            0,
            &[
                "check",
                "--space",
                &f8,
                "--model",
                "gcc",
                "--epsilon",
                "0",
                "--partition",
                "C",
            ],
        ),
        case(
            "check-f8-ghr",
            0,
            &[
                "check",
                "--space",
                &f8,
                "--model",
                "ghr",
                "--epsilon",
                "0",
                "--partition",
                "C",
            ],
        ),
        case(
            "check-f8-gm",
            0,
            &[
                "check",
                "--space",
                &f8,
                "--model",
                "gm",
                "--epsilon",
                "0",
                "--partition",
                "C,notC",
            ],
        ),
        case(
            "check-f8-ghr-shifted",
            1,
            &[
                "check",
                "--space",
                &f8,
                "--model",
                "ghr",
                "--epsilon",
                "1/20",
                "--partition",
                "C",
            ],
        ),
        case(
            "check-u4-hr",
            1,
            &["check", "--space", &u4, "--model", "hr", "--partition", "A"],
        ),
        case(
            "construct-s4-ghr-2",
            0,
            &[
                "construct",
                "--space",
                &s4,
                "--model",
                "ghr",
                "--size",
                "2",
                "--epsilon",
                "0",
            ],
        ),
        case(
            "construct-s4-gm-3",
            0,
            &[
                "construct",
                "--space",
                &s4,
                "--model",
                "gm",
                "--size",
                "3",
                "--epsilon",
                "0",
            ],
        ),
        case(
            "construct-s4-ghr-4-shifted",
            0,
            &[
                "construct",
                "--space",
                &s4,
                "--model",
                "ghr",
                "--size",
                "4",
                "--epsilon",
                "1/20",
            ],
        ),
        case(
            "construct-s4-covariance-bound",
            3,
            &[
                "construct",
                "--space",
                &s4,
                "--model",
                "ghr",
                "--size",
                "4",
                "--epsilon",
                "-1/10",
            ],
        ),
        case(
            "construct-s4-infeasible",
            3,
            &[
                "construct",
                "--space",
                &s4,
                "--model",
                "ghr",
                "--size",
                "2",
                "--epsilon",
                "-1/4",
            ],
        ),
        case(
            "search-f8-ghr",
            0,
            &[
                "search", "--space", &f8, "--model", "ghr", "--sizes", "2..2",
            ],
        ),
        case(
            "search-f8-gm",
            0,
            &["search", "--space", &f8, "--model", "gm", "--sizes", "2..3"],
        ),
        case(
            "search-u4-ghr",
            0,
            &[
                "search", "--space", &u4, "--model", "ghr", "--sizes", "2..4",
            ],
        ),
        case(
            "search-s4-hr",
            0,
            &["search", "--space", &s4, "--model", "hr"],
        ),
        case(
            "admissible-hr-3",
            0,
            &[
                "admissible",
                "--prob-a",
                "1/2",
                "--prob-b",
                "1/2",
                "--epsilon",
                "0",
                "--deviation",
                "1/20",
                "--size",
                "3",
                "--model",
                "hr",
            ],
        ),
        case(
            "admissible-m-3",
            0,
            &[
                "admissible",
                "--prob-a",
                "3/10",
                "--prob-b",
                "7/10",
                "--epsilon",
                "1/20",
                "--deviation",
                "1/100",
                "--size",
                "3",
                "--model",
                "m",
            ],
        ),
        case(
            "admissible-sampled",
            0,
            &[
                "admissible",
                "--prob-a",
                "1/2",
                "--prob-b",
                "1/2",
                "--epsilon",
                "0",
                "--deviation",
                "1/20",
                "--size",
                "2",
                "--trials",
                "1000",
                "--seed",
                "7",
            ],
        ),
    ];
    for c in &mut out {
        c.writes = c.name.starts_with("construct-") && c.code == 0;
    }
    out
}

/// Runs a case; `--out` goes to a scratch directory and the written file
/// is returned alongside the outcome.
pub fn run_case(case: &Case, scratch: &Path) -> (Outcome, Option<String>) {
    let mut args = vec!["rccs".to_string()];
    args.extend(case.args.iter().cloned());
    let out_path = scratch.join(format!("{}.json", case.name));
    if case.writes {
        args.push("--out".into());
        args.push(out_path.display().to_string());
    }
    let outcome = run(args);
    let written = case
        .writes
        .then(|| fs::read_to_string(&out_path).unwrap_or_default());
    (outcome, written)
}

/// Every golden comparison for one case, as a list of failures.
pub fn check_case(case: &Case, scratch: &Path) -> Vec<String> {
    let (outcome, written) = run_case(case, scratch);
    let mut failures = Vec::new();
    if outcome.code != case.code {
        failures.push(format!(
            "{}: exit {} (expected {}), stderr: {}",
            case.name, outcome.code, case.code, outcome.stderr
        ));
    }
    let stdout_name = format!("{}.stdout", case.name);
    if let Err(e) = compare_golden(&stdout_name, &outcome.stdout) {
        failures.push(e);
    }
    let stderr = outcome
        .stderr
        .replace(&data_dir().display().to_string(), "<tests>");
    if !stderr.is_empty() || golden_path(&format!("{}.stderr", case.name)).exists() {
        if let Err(e) = compare_golden(&format!("{}.stderr", case.name), &stderr) {
            failures.push(e);
        }
    }
    if let Some(file) = written {
        if let Err(e) = compare_golden(&format!("{}.out.json", case.name), &file) {
            failures.push(e);
        }
    }
    failures
}
