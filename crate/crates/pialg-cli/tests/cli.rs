//! End-to-end checks of the binary: exit codes, golden reports, determinism,
//! and JSON mirror round-trips.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_pialg"))
}

fn fixture() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/rp2.json")
}

fn golden(name: &str) -> String {
    fs::read_to_string(
        Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/golden").join(name),
    )
    .unwrap()
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn tmp_file(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("pialg-cli-test-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    fs::write(&path, contents).unwrap();
    path
}

#[test]
fn validate_bundle_passes() {
    let out = run(&["validate", fixture().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    assert_eq!(stdout_of(&out), golden("validate.txt"));
}

#[test]
fn validate_rejects_broken_action_table() {
    // alpha_eta . eta = beta instead of 2 beta: order 2 source cannot hit
    // an order 4 element.
    let mut doc: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(fixture()).unwrap()).unwrap();
    doc["algebras"][0]["actions"][2]["matrix"] = serde_json::json!([[1]]);
    let path = tmp_file("broken-action.json", &doc.to_string());
    let out = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2), "{out:?}");
    let text = stdout_of(&out);
    assert!(text.contains("algebra Lambda: FAILED"), "{text}");
    assert!(text.contains("not a homomorphism"), "{text}");
}

#[test]
fn malformed_document_exits_one_with_position() {
    let path = tmp_file("malformed.json", "{ \"algebras\": [ oops\n");
    let out = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1), "{out:?}");
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("parse error at line"), "{err}");
}

#[test]
fn unknown_cross_reference_exits_one() {
    let path = tmp_file(
        "dangling.json",
        r#"{"modules": [{"name": "M", "base": "Ghost", "loop_of": "Ghost"}]}"#,
    );
    let out = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1), "{out:?}");
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("unknown"), "{err}");
}

#[test]
fn cohomology_tables_match_goldens() {
    let f = fixture();
    let out = run(&["cohomology", f.to_str().unwrap(), "--algebra", "Lambda", "--module", "OmegaLambda"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out), golden("cohomology_omega_lambda.txt"));

    let out = run(&["cohomology", f.to_str().unwrap(), "--algebra", "Lambda", "--module", "OmegaS"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out), golden("cohomology_omega_sphere.txt"));
}

#[test]
fn cohomology_of_zero_module_is_all_zero() {
    let mut doc: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(fixture()).unwrap()).unwrap();
    doc["modules"]
        .as_array_mut()
        .unwrap()
        .push(serde_json::json!({"name": "Zero", "base": "Lambda", "window": [0, 2]}));
    let path = tmp_file("with-zero-module.json", &doc.to_string());
    let out = run(&["cohomology", path.to_str().unwrap(), "--algebra", "Lambda", "--module", "Zero"]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let text = stdout_of(&out);
    for line in text.lines().filter(|l| l.trim_start().starts_with("H^")) {
        assert!(line.ends_with("= 0"), "{line}");
    }
}

#[test]
fn arrow_reports_match_goldens() {
    let f = fixture();
    let out = run(&["arrow", f.to_str().unwrap(), "--map", "phi"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out), golden("arrow_phi.txt"));

    let out = run(&["arrow", f.to_str().unwrap(), "--map", "psi"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out), golden("arrow_psi.txt"));
}

#[test]
fn obstruct_report_matches_golden_and_declares_not_realizable() {
    let out = run(&["obstruct", fixture().to_str().unwrap(), "--map", "phi", "--stages", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert_eq!(text, golden("obstruct_phi.txt"));
    assert!(text.contains("stage 1: existence H^3 = Z/2"));
    assert!(text.contains("verdict: NOT REALIZABLE"));
}

#[test]
fn obstruct_on_a_free_to_free_map_is_realizable() {
    // The sphere algebra mapped to itself: every host group vanishes, so
    // there is no room for obstructions.
    let mut doc: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(fixture()).unwrap()).unwrap();
    doc["maps"].as_array_mut().unwrap().push(serde_json::json!({
        "name": "idS",
        "source": "S",
        "target": "S",
        "components": [
            {"degree": -1, "matrix": [[1]]},
            {"degree": 0, "matrix": [[1]]},
            {"degree": 1, "matrix": [[1]]},
            {"degree": 2, "matrix": [[1]]}
        ]
    }));
    let path = tmp_file("free-to-free.json", &doc.to_string());
    let out = run(&["obstruct", path.to_str().unwrap(), "--map", "idS", "--stages", "3"]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let text = stdout_of(&out);
    assert!(text.contains("verdict: REALIZABLE (no obstruction)"), "{text}");
    for line in text.lines().filter(|l| l.contains("existence")) {
        assert!(line.contains("= 0"), "{line}");
    }
}

#[test]
fn obstruct_with_zero_stages_is_empty_but_clean() {
    let out = run(&["obstruct", fixture().to_str().unwrap(), "--map", "psi", "--stages", "0"]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let text = stdout_of(&out);
    assert!(!text.contains("stage 1"), "{text}");
}

#[test]
fn bracket_report_matches_golden() {
    let out = run(&["bracket", fixture().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out), golden("brackets.txt"));
}

#[test]
fn byte_identical_across_runs() {
    let f = fixture();
    for args in [
        vec!["validate", f.to_str().unwrap()],
        vec!["cohomology", f.to_str().unwrap(), "--algebra", "Lambda", "--module", "OmegaLambda"],
        vec!["arrow", f.to_str().unwrap(), "--map", "phi"],
        vec!["obstruct", f.to_str().unwrap(), "--map", "phi", "--stages", "2"],
        vec!["bracket", f.to_str().unwrap()],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(a.status.code(), b.status.code());
    }
}

#[test]
fn json_mirrors_round_trip() {
    let dir = std::env::temp_dir().join(format!("pialg-json-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let f = fixture();

    let check = |name: &str, args: &[&str]| {
        let path = dir.join(name);
        let mut full: Vec<&str> = args.to_vec();
        let path_str = path.to_str().unwrap().to_string();
        full.push("--json");
        full.push(&path_str);
        let out = bin().args(&full).output().unwrap();
        assert!(out.status.success() || out.status.code() == Some(2), "{out:?}");
        let text = fs::read_to_string(&path).unwrap();
        text
    };

    let text = check(
        "cohomology.json",
        &["cohomology", f.to_str().unwrap(), "--algebra", "Lambda", "--module", "OmegaLambda"],
    );
    let parsed: pialg_cli::report::CohomologyJson = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string_pretty(&parsed).unwrap() + "\n", text);
    assert_eq!(parsed.rows[0].group.invariant_factors, vec![2]);
    assert_eq!(parsed.rows[3].group.invariant_factors, vec![2]);

    let text = check("arrow.json", &["arrow", f.to_str().unwrap(), "--map", "phi"]);
    let parsed: pialg_cli::report::ArrowJson = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string_pretty(&parsed).unwrap() + "\n", text);
    assert!(parsed.les_exact);

    let text = check(
        "obstruct.json",
        &["obstruct", f.to_str().unwrap(), "--map", "phi", "--stages", "2"],
    );
    let parsed: pialg_cli::report::ObstructJson = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string_pretty(&parsed).unwrap() + "\n", text);
    assert_eq!(parsed.verdict, "NOT REALIZABLE");
    assert_eq!(parsed.stages[0].arrow_existence.invariant_factors, vec![2]);

    let text = check("validate.json", &["validate", f.to_str().unwrap()]);
    let parsed: pialg_cli::report::ValidateJson = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string_pretty(&parsed).unwrap() + "\n", text);
    assert!(parsed.ok);

    let text = check("brackets.json", &["bracket", f.to_str().unwrap()]);
    let parsed: pialg_cli::report::BracketsJson = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string_pretty(&parsed).unwrap() + "\n", text);
    assert_eq!(parsed.brackets.len(), 2);
}
