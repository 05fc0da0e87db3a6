//! CLI behavior: scenario parsing, report rendering, exit codes, and DOT
//! output. Runs the installed binary where process behavior matters and the
//! library elsewhere.

use std::path::PathBuf;
use std::process::Command;

use potentia_cli::scenario::{
    load_scenario, parse_scenario, scenario_to_json, write_scenario, FieldTag,
};
use potentia_core::{samples, RayId};

fn dataset(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../datasets")
        .join(name)
}

fn run_potentia(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_potentia"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn bundled_datasets_match_the_programmatic_samples() {
    let cabello = load_scenario(&dataset("cabello18.json")).unwrap();
    assert_eq!(cabello.frame, samples::cabello18());
    assert!(cabello.state.is_some());

    let pair = load_scenario(&dataset("qubit-pair.json")).unwrap();
    assert_eq!(pair.frame, samples::qubit_pair());

    let single = load_scenario(&dataset("single-basis-d3.json")).unwrap();
    assert_eq!(single.frame, samples::single_basis_d3());

    let tomo = load_scenario(&dataset("qubit-tomography.json")).unwrap();
    assert_eq!(tomo.frame, samples::tomography_qubit());
    assert_eq!(
        tomo.state,
        Some(potentia_core::State::Density(samples::tomography_state()))
    );

    let powers = load_scenario(&dataset("powers-table.json")).unwrap();
    let (frame, valuation) = samples::powers_table();
    assert_eq!(powers.frame, frame);
    assert_eq!(
        powers.valuation.as_ref().map(|v| v.values().clone()),
        Some(valuation.values().clone())
    );
}

#[test]
fn powers_table_ingests_decimals_exactly() {
    let powers = load_scenario(&dataset("powers-table.json")).unwrap();
    let valuation = powers.valuation.expect("standalone valuation");
    let ray = powers
        .frame
        .rays()
        .iter()
        .find(|r| r.label() == Some("Ball Control (Messi)"))
        .expect("labelled ray");
    let value = valuation.value(ray.id()).unwrap();
    assert_eq!(
        *value,
        num::BigRational::new(24.into(), 25.into()),
        "0.96 must ingest as 24/25"
    );
}

#[test]
fn scenario_round_trip_preserves_the_frame() {
    for name in [
        "cabello18.json",
        "qubit-pair.json",
        "single-basis-d3.json",
        "qubit-tomography.json",
        "powers-table.json",
    ] {
        let loaded = load_scenario(&dataset(name)).unwrap();
        let rewritten = scenario_to_json(&write_scenario(
            &loaded.frame,
            loaded.field,
            loaded.state.as_ref(),
            loaded.valuation.as_ref(),
        ));
        let reloaded = parse_scenario(&rewritten, &loaded.name).unwrap();
        assert_eq!(reloaded.frame, loaded.frame, "{name} frame round trip");
        assert_eq!(reloaded.state, loaded.state, "{name} state round trip");
        assert_eq!(
            reloaded.valuation.map(|v| v.values().clone()),
            loaded.valuation.map(|v| v.values().clone()),
            "{name} valuation round trip"
        );
    }
}

#[test]
fn duplicate_canonical_rays_are_rejected_with_both_ids() {
    let text = r#"{
        "dimension": 2,
        "field": "rational",
        "rays": [
            {"id": 1, "coords": ["1", "0"]},
            {"id": 2, "coords": ["2", "0"]}
        ]
    }"#;
    let err = parse_scenario(text, "dup").unwrap_err().to_string();
    assert!(err.contains('1') && err.contains('2'), "error: {err}");
    assert!(err.contains("canonical"), "error: {err}");
}

#[test]
fn unknown_fields_are_rejected() {
    let text = r#"{
        "dimension": 2,
        "field": "rational",
        "rays": [{"id": 1, "coords": ["1", "0"]}],
        "surprise": true
    }"#;
    let err = parse_scenario(text, "unknown").unwrap_err().to_string();
    assert!(err.contains("surprise"), "error: {err}");
}

#[test]
fn complex_entries_require_the_gaussian_field() {
    let text = r#"{
        "dimension": 2,
        "field": "rational",
        "rays": [{"id": 1, "coords": ["1", "i"]}]
    }"#;
    let err = parse_scenario(text, "field").unwrap_err().to_string();
    assert!(err.contains("complex entry"), "error: {err}");
}

#[test]
fn non_psd_state_is_rejected() {
    let text = r#"{
        "dimension": 2,
        "field": "rational",
        "rays": [{"id": 1, "coords": ["1", "0"]}, {"id": 2, "coords": ["0", "1"]}],
        "state": {"density": [["2", "0"], ["0", "-1"]]}
    }"#;
    let err = parse_scenario(text, "bad-state").unwrap_err().to_string();
    assert!(err.contains("positive semi-definite"), "error: {err}");
}

#[test]
fn verdicts_do_not_change_exit_codes() {
    // UNSAT verdict still exits 0.
    let unsat = run_potentia(&[
        "ks",
        "--scenario",
        dataset("cabello18.json").to_str().unwrap(),
    ]);
    assert!(unsat.status.success());
    // A failed additivity check still exits 0.
    let not_psa = run_potentia(&[
        "check-psa",
        "--scenario",
        dataset("powers-table.json").to_str().unwrap(),
    ]);
    assert!(not_psa.status.success());
}

#[test]
fn operational_errors_exit_nonzero() {
    let missing = run_potentia(&["ks", "--scenario", "no-such-file.json"]);
    assert!(!missing.status.success());
    let no_state = run_potentia(&[
        "valuate",
        "--scenario",
        dataset("qubit-pair.json").to_str().unwrap(),
    ]);
    assert!(!no_state.status.success());
    let stderr = String::from_utf8_lossy(&no_state.stderr);
    assert!(stderr.contains("--state"), "stderr: {stderr}");
}

#[test]
fn ks_report_shows_the_parity_certificate() {
    let output = run_potentia(&[
        "ks",
        "--scenario",
        dataset("cabello18.json").to_str().unwrap(),
        "--sequential",
    ]);
    let stdout = String::from_utf8_lossy(&output.stdout);
    assert!(
        stdout.contains("UNSATISFIABLE (parity certificate: 9 bases, all multiplicities even)"),
        "stdout: {stdout}"
    );
}

#[test]
fn valuate_maximally_mixed_shows_quarters_and_unit_sums() {
    let output = run_potentia(&[
        "valuate",
        "--scenario",
        dataset("cabello18.json").to_str().unwrap(),
        "--sequential",
    ]);
    let stdout = String::from_utf8_lossy(&output.stdout);
    let quarter_rows = stdout.lines().filter(|l| l.contains("1/4")).count();
    assert!(quarter_rows >= 18, "stdout: {stdout}");
    assert!(stdout.contains("psa: true"));
    // All nine basis sums are exactly 1.
    let sums = stdout
        .lines()
        .skip_while(|l| !l.starts_with("basis sums"))
        .skip(1)
        .take(9)
        .all(|l| !l.trim_end().ends_with(' ') && l.trim_end().ends_with('1'));
    assert!(sums, "stdout: {stdout}");
}

#[test]
fn contexts_on_single_basis_scenario() {
    let output = run_potentia(&[
        "contexts",
        "--scenario",
        dataset("single-basis-d3.json").to_str().unwrap(),
        "--sequential",
    ]);
    let stdout = String::from_utf8_lossy(&output.stdout);
    assert!(stdout.contains("maximal contexts: 1 (1 bases)"), "{stdout}");
    assert!(stdout.contains("[1 2 3]  basis"), "{stdout}");
}

#[test]
fn json_format_is_machine_readable() {
    let output = run_potentia(&[
        "ks",
        "--scenario",
        dataset("qubit-pair.json").to_str().unwrap(),
        "--format",
        "json",
        "--sequential",
    ]);
    let stdout = String::from_utf8_lossy(&output.stdout);
    let value: serde_json::Value = serde_json::from_str(&stdout).expect("valid JSON");
    assert_eq!(value["command"], "ks");
    assert_eq!(value["body"]["ks"]["satisfiable"], true);
    assert!(value.get("timing_ms").is_none(), "sequential mode omits timing");
}

#[test]
fn dot_export_is_stable_and_complete() {
    let output = run_potentia(&[
        "export-dot",
        "--scenario",
        dataset("cabello18.json").to_str().unwrap(),
    ]);
    let stdout = String::from_utf8_lossy(&output.stdout);
    for id in 1..=18 {
        assert!(stdout.contains(&format!("n{id} [label=")), "node n{id} missing");
    }
    for k in 0..9 {
        assert!(stdout.contains(&format!("subgraph cluster_ctx{k}")), "cluster ctx{k} missing");
    }
    assert!(!stdout.contains("cluster_ctx9"));
    // The bundled maximally mixed state labels every node 1/4.
    assert_eq!(stdout.matches("\\n1/4\"").count(), 18, "{stdout}");
    // 63 orthogonality edges.
    assert_eq!(stdout.matches(" -- ").count(), 63);
}

#[test]
fn dot_export_without_intensities_or_contexts() {
    // Two non-orthogonal rays: no edges, no basis clusters, plain labels.
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("loose.json");
    std::fs::write(
        &path,
        r#"{
            "dimension": 2,
            "field": "rational",
            "rays": [{"id": 1, "coords": ["1", "1"]}, {"id": 2, "coords": ["1", "2"]}]
        }"#,
    )
    .unwrap();
    let output = run_potentia(&["export-dot", "--scenario", path.to_str().unwrap()]);
    let stdout = String::from_utf8_lossy(&output.stdout);
    assert!(output.status.success());
    assert!(!stdout.contains(" -- "));
    assert!(!stdout.contains("cluster"));
    assert!(!stdout.contains("fillcolor=\"gray"));
}

#[test]
fn reconstruct_reports_underdetermination_for_real_rays_in_d4() {
    // All-real rays never pin the imaginary off-diagonals.
    let output = run_potentia(&[
        "reconstruct",
        "--scenario",
        dataset("cabello18.json").to_str().unwrap(),
        "--sequential",
    ]);
    let stdout = String::from_utf8_lossy(&output.stdout);
    assert!(output.status.success());
    assert!(stdout.contains("outcome: underdetermined"), "{stdout}");
}

#[test]
fn output_flag_writes_the_report_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.txt");
    let output = run_potentia(&[
        "ks",
        "--scenario",
        dataset("qubit-pair.json").to_str().unwrap(),
        "--sequential",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert!(output.status.success());
    assert!(output.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.contains("SATISFIABLE"));
}

#[test]
fn heyting_demo_runs_on_a_scenario_graph() {
    let output = run_potentia(&[
        "heyting-demo",
        "--scenario",
        dataset("qubit-pair.json").to_str().unwrap(),
        "--sequential",
    ]);
    let stdout = String::from_utf8_lossy(&output.stdout);
    assert!(output.status.success());
    assert!(stdout.contains("host qubit-pair: 4 nodes, 2 edges"), "{stdout}");
    assert!(stdout.contains("excluded middle holds: false"), "{stdout}");
}

#[test]
fn labels_survive_loading() {
    let loaded = load_scenario(&dataset("cabello18.json")).unwrap();
    assert_eq!(
        loaded.frame.ray(RayId(1)).unwrap().label(),
        Some("v1"),
        "labels preserved"
    );
    assert_eq!(loaded.field, FieldTag::Rational);
}
