//! End-to-end CLI behavior: exit codes, JSON pipelines, and file handling.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_gridribbon"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn gridribbon")
}

fn run_with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn gridribbon");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout_str(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn generate_emits_grid_json() {
    let out = run(&["generate", "torus", "--p", "2", "--q", "3"]);
    assert!(out.status.success());
    assert_eq!(
        stdout_str(&out).trim(),
        r#"{"size":5,"black":[0,1,2,3,4],"white":[3,4,0,1,2]}"#
    );
}

#[test]
fn generate_rejects_bad_parameters_with_usage_exit() {
    let out = run(&["generate", "torus", "--p", "2", "--q", "4"]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["generate", "twist", "--n", "0"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn unknown_subcommand_is_a_usage_error() {
    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn help_exits_zero() {
    let out = run(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn validate_missing_file_is_a_data_error() {
    let out = run(&["validate", "missing.json"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn validate_malformed_json_is_a_data_error() {
    let out = run_with_stdin(&["validate", "-"], "{\"size\": 2, \"black\": [0]}");
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn validate_invalid_diagram_reports_and_fails_verification() {
    let out = run_with_stdin(
        &["validate", "-", "--format", "json"],
        r#"{"size":2,"black":[0,1],"white":[0,1]}"#,
    );
    assert_eq!(out.status.code(), Some(2));
    let payload: serde_json::Value = serde_json::from_str(stdout_str(&out).trim()).unwrap();
    assert_eq!(payload["valid"], serde_json::json!(false));
    assert_eq!(payload["no_shared_cell"], serde_json::json!(false));
}

#[test]
fn pipeline_generate_into_length() {
    let gen = run(&["generate", "torus", "--p", "2", "--q", "3"]);
    let out = run_with_stdin(&["length", "-", "--format", "json"], &stdout_str(&gen));
    assert!(out.status.success());
    let payload: serde_json::Value = serde_json::from_str(stdout_str(&out).trim()).unwrap();
    assert_eq!(payload["total"], serde_json::json!(24));
    assert_eq!(payload["horizontal_sum"], serde_json::json!(12));
}

#[test]
fn certify_twist_json_payload() {
    let out = run(&["certify", "twist", "--n", "2", "--format", "json"]);
    assert!(out.status.success());
    let text = stdout_str(&out);
    assert_eq!(text.lines().count(), 1, "single JSON document on stdout");
    let payload: serde_json::Value = serde_json::from_str(text.trim()).unwrap();
    assert_eq!(payload["ratio"], serde_json::json!([8, 1]));
    assert_eq!(payload["holds"], serde_json::json!(true));
    assert_eq!(payload["computed_length"], serde_json::json!(32));
}

#[test]
fn certify_quadratic_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("grid.json");
    let gen = run(&["generate", "twist", "--n", "2"]);
    std::fs::write(&path, stdout_str(&gen)).unwrap();
    let out = run(&[
        "certify",
        "quadratic",
        path.to_str().unwrap(),
        "--crossings",
        "4",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let payload: serde_json::Value = serde_json::from_str(stdout_str(&out).trim()).unwrap();
    assert_eq!(payload["certificate"]["bound_value"], serde_json::json!(60));
    assert_eq!(payload["certificate"]["holds"], serde_json::json!(true));
}

#[test]
fn certify_quadratic_rejects_small_crossing_numbers() {
    let gen = run(&["generate", "twist", "--n", "1"]);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("grid.json");
    std::fs::write(&path, stdout_str(&gen)).unwrap();
    let out = run(&[
        "certify",
        "quadratic",
        path.to_str().unwrap(),
        "--crossings",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn fold_json_payload() {
    let out = run(&["fold", "--n", "4", "--format", "json"]);
    assert!(out.status.success());
    let payload: serde_json::Value = serde_json::from_str(stdout_str(&out).trim()).unwrap();
    let total = payload["total_length"].as_f64().unwrap();
    assert!((total - 13.9922829).abs() < 1e-6);
    assert_eq!(payload["crossing_number"], serde_json::json!(6));
    // odd counts reduce to the next even layout
    let out = run(&["fold", "--n", "3", "--format", "json"]);
    let payload: serde_json::Value = serde_json::from_str(stdout_str(&out).trim()).unwrap();
    assert_eq!(payload["layout_half_twists"], serde_json::json!(4));
    let odd = payload["upper_bound_per_width"].as_f64().unwrap();
    assert!((odd - 13.9922829).abs() < 1e-6);
}

#[test]
fn fold_layout_json_lists_points() {
    let out = run(&["fold", "--n", "2", "--format", "json", "--layout-json"]);
    let payload: serde_json::Value = serde_json::from_str(stdout_str(&out).trim()).unwrap();
    let points = payload["points"].as_object().unwrap();
    assert_eq!(points.len(), 21);
    assert!(points.contains_key("O") && points.contains_key("x9"));
}

#[test]
fn verify_family_match_and_mismatch() {
    let gen = run(&["generate", "twist", "--n", "2"]);
    let grid = stdout_str(&gen);
    let ok = run_with_stdin(&["verify", "-", "--expect", "twist:2"], &grid);
    assert_eq!(ok.status.code(), Some(0));
    let bad = run_with_stdin(&["verify", "-", "--expect", "torus:2,3"], &grid);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn verify_print_poly_emits_exponent_map() {
    let gen = run(&["generate", "torus", "--p", "2", "--q", "3"]);
    let out = run_with_stdin(
        &["verify", "-", "--expect", "torus:2,3", "--format", "json", "--print-poly"],
        &stdout_str(&gen),
    );
    assert_eq!(out.status.code(), Some(0));
    let payload: serde_json::Value = serde_json::from_str(stdout_str(&out).trim()).unwrap();
    assert_eq!(payload["matched"], serde_json::json!(true));
    let poly = payload["computed"].as_object().unwrap();
    assert_eq!(poly["0"], serde_json::json!(1));
    assert_eq!(poly["1"], serde_json::json!(-1));
    assert_eq!(poly["2"], serde_json::json!(1));
}

#[test]
fn optimize_returns_valid_best_grid() {
    let gen = run(&["generate", "torus", "--p", "2", "--q", "3"]);
    let out = run_with_stdin(
        &[
            "optimize", "-", "--steps", "300", "--seed", "5", "--restarts", "2",
            "--format", "json",
        ],
        &stdout_str(&gen),
    );
    assert!(out.status.success());
    let payload: serde_json::Value = serde_json::from_str(stdout_str(&out).trim()).unwrap();
    assert!(payload["best_total"].as_u64().unwrap() <= 24);
    assert_eq!(payload["start_total"], serde_json::json!(24));
    let best = payload["best"].clone();
    let check = run_with_stdin(
        &["validate", "-", "--format", "json"],
        &serde_json::to_string(&best).unwrap(),
    );
    assert_eq!(check.status.code(), Some(0));
}

#[test]
fn render_grid_svg_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let grid_path = dir.path().join("g.json");
    let svg_path = dir.path().join("g.svg");
    std::fs::write(
        &grid_path,
        stdout_str(&run(&["generate", "torus", "--p", "2", "--q", "3"])),
    )
    .unwrap();
    let out = run(&[
        "render",
        grid_path.to_str().unwrap(),
        "--style",
        "grid",
        "--out",
        svg_path.to_str().unwrap(),
        "--quiet",
    ]);
    assert!(out.status.success());
    let svg = std::fs::read_to_string(&svg_path).unwrap();
    assert!(svg.starts_with("<svg"));
    assert!(svg.trim_end().ends_with("</svg>"));
    assert_eq!(svg.matches("class=\"dot").count(), 10);
}

#[test]
fn render_fold_requires_n() {
    let out = run(&["render", "fold"]);
    assert_eq!(out.status.code(), Some(1));
    let dir = tempfile::tempdir().unwrap();
    let svg_path = dir.path().join("fold.svg");
    let out = run(&[
        "render", "fold", "--n", "4", "--out", svg_path.to_str().unwrap(), "--quiet",
    ]);
    assert!(out.status.success());
    assert!(std::fs::read_to_string(&svg_path).unwrap().contains("centerline"));
}

#[test]
fn render_knot_of_multi_component_pattern_fails_with_data_error() {
    // p=2, q=4 raw pattern is a link; built by hand here
    let link = r#"{"size":6,"black":[0,1,2,3,4,5],"white":[4,5,0,1,2,3]}"#;
    let out = run_with_stdin(&["render", "-", "--style", "knot"], link);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn optimize_of_multi_component_pattern_fails_with_data_error() {
    let link = r#"{"size":6,"black":[0,1,2,3,4,5],"white":[4,5,0,1,2,3]}"#;
    let out = run_with_stdin(&["optimize", "-", "--steps", "10"], link);
    assert_eq!(out.status.code(), Some(3));
}

/// Minimal well-formedness scan: tags balance and attributes are quoted.
fn assert_well_formed_xml(doc: &str) {
    let mut stack: Vec<String> = Vec::new();
    let mut rest = doc;
    while let Some(start) = rest.find('<') {
        let end = rest[start..].find('>').expect("unclosed tag") + start;
        let tag = &rest[start + 1..end];
        assert!(!tag.is_empty());
        if let Some(name) = tag.strip_prefix('/') {
            let open = stack.pop().unwrap_or_else(|| panic!("stray closing </{name}>"));
            assert_eq!(open, name, "mismatched closing tag");
        } else if !tag.ends_with('/') && !tag.starts_with('?') && !tag.starts_with('!') {
            let name: String = tag
                .chars()
                .take_while(|c| !c.is_whitespace())
                .collect();
            stack.push(name);
        }
        // attribute quotes must be balanced inside the tag
        assert_eq!(tag.matches('"').count() % 2, 0, "unbalanced quotes in <{tag}>");
        rest = &rest[end + 1..];
    }
    assert!(stack.is_empty(), "unclosed tags: {stack:?}");
}

#[test]
fn emitted_svg_is_well_formed() {
    for args in [
        vec!["render", "-", "--style", "grid"],
        vec!["render", "-", "--style", "knot"],
        vec!["render", "-", "--style", "ribbon"],
    ] {
        let grid = stdout_str(&run(&["generate", "twist", "--n", "2"]));
        let out = run_with_stdin(&args, &grid);
        assert!(out.status.success());
        assert_well_formed_xml(&stdout_str(&out));
    }
    let out = run(&["render", "fold", "--n", "6"]);
    assert_well_formed_xml(&stdout_str(&out));
}
