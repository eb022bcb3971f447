use std::path::Path;
use std::process::{Command, Output};

use hilbert_concepts_cli::commands::{
    ClassifyReport, CompareReport, InterferenceReport, MetricCheckReport,
};
use hilbert_concepts_cli::config::ConceptConfig;

fn qconcepts(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qconcepts"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn configs() -> &'static Path {
    Path::new(concat!(env!("CARGO_MANIFEST_DIR"), "/../../configs"))
}

fn write_config(dir: &tempfile::TempDir, text: &str) -> String {
    let path = dir.path().join("cfg.json");
    std::fs::write(&path, text).unwrap();
    path.display().to_string()
}

#[test]
fn classify_default_config_is_a_tie() {
    let out = qconcepts(&["classify"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "object mu=3.000000 sigma=2.000000\n\
         concept     raw_score   probability\n\
         boat         0.359463      0.500000\n\
         car          0.359463      0.500000\n\
         decision: TIE{boat,car}\n"
    );
}

#[test]
fn classify_object_equal_to_concept() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(
        &dir,
        r#"{"concepts": [{"name": "car", "mu": 5, "sigma": 1}], "object": {"mu": 5, "sigma": 1}}"#,
    );
    let out = qconcepts(&["classify", "--config", &cfg]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(
        text.contains("car          1.000000      1.000000"),
        "{text}"
    );
    assert!(text.ends_with("decision: car\n"));
}

#[test]
fn classify_json_round_trips() {
    let out = qconcepts(&[
        "classify",
        "--format",
        "json",
        "--object-mu",
        "4",
        "--object-sigma",
        "1",
    ]);
    assert!(out.status.success());
    let report: ClassifyReport = serde_json::from_str(&stdout(&out)).unwrap();
    assert!((report.result.probability("car").unwrap() - 0.982_013_790_037_908_5).abs() < 1e-12);
    let again = serde_json::to_string_pretty(&report).unwrap() + "\n";
    assert_eq!(again, stdout(&out));
}

#[test]
fn quadrature_classification_matches_closed_form() {
    let closed = stdout(&qconcepts(&["classify"]));
    let quad = stdout(&qconcepts(&["classify", "--quadrature"]));
    assert_eq!(closed, quad);
}

#[test]
fn invalid_sigma_exits_2_with_entry_name() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(
        &dir,
        "{\n  \"concepts\": [\n    {\"name\": \"car\", \"mu\": 5, \"sigma\": -1}\n  ]\n}\n",
    );
    let out = qconcepts(&["classify", "--config", &cfg]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(
        err.contains("cfg.json:3: concepts[0] 'car': sigma must be positive"),
        "{err}"
    );
}

#[test]
fn narrow_grid_is_a_computation_error() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(
        &dir,
        r#"{"concepts": [{"name": "car", "mu": 5, "sigma": 1}],
            "grid": {"x_min": 4.5, "x_max": 5.5, "n_points": 101}}"#,
    );
    let out = qconcepts(&["classify", "--quadrature", "--config", &cfg]);
    assert_eq!(out.status.code(), Some(1));
    // the closed form does not need the grid
    assert!(qconcepts(&["classify", "--config", &cfg]).status.success());
}

#[test]
fn missing_config_and_bad_flags_exit_2() {
    assert_eq!(
        qconcepts(&["classify", "--config", "/nonexistent.json"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        qconcepts(&["classify", "--format", "yaml"]).status.code(),
        Some(2)
    );
    assert_eq!(
        qconcepts(&["classify", "--object-sigma", "0"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn emit_figure_empty_concepts_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(&dir, r#"{"concepts": []}"#);
    assert_eq!(
        qconcepts(&["emit-figure", "--config", &cfg]).status.code(),
        Some(2)
    );
}

#[test]
fn emit_figure_unwritable_output_exit_1() {
    let out = qconcepts(&["emit-figure", "--output", "/nonexistent-dir/fig.csv"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn wavefunction_csv_layout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("wf.csv");
    let out = qconcepts(&[
        "emit-figure",
        "--which",
        "wavefunctions",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(!text.contains('\r'));
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("x,psi_car,psi_boat,psi_object"));
    assert_eq!(lines.count(), 4097);
    // x = 5 sits on node 2304 of [-13, 19]
    let row: Vec<f64> = text
        .lines()
        .nth(2305)
        .unwrap()
        .split(',')
        .map(|v| v.parse().unwrap())
        .collect();
    assert_eq!(row[0], 5.0);
    assert!((row[1] - std::f64::consts::PI.powf(-0.25)).abs() < 1e-9);
}

#[test]
fn metric_check_passes_and_faults_fail() {
    let out = qconcepts(&["metric-check", "--trials", "200", "--format", "json"]);
    assert!(out.status.success());
    let report: MetricCheckReport = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(report.all_passed());
    assert_eq!(report.seed, 42);

    assert_eq!(
        qconcepts(&["metric-check", "--trials", "0"]).status.code(),
        Some(2)
    );

    let out = qconcepts(&["metric-check", "--trials", "100", "--inject-fault", "km1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL  fuzzy KM1 M(x,y,0)=0"));

    let out = qconcepts(&[
        "metric-check",
        "--trials",
        "20",
        "--inject-fault",
        "identity",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL  hilbert identity of indiscernibles"));
}

#[test]
fn compare_fuzzy_builtin_config() {
    let out = qconcepts(&["compare-fuzzy", "--x", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(
        text.contains("car           0.359463     0.500000     0.500000     0.500000"),
        "{text}"
    );
    assert!(text.contains("decisions agree: yes"));
    assert!(!text.contains("note:"));
}

#[test]
fn compare_fuzzy_narrow_memberships_flags_vanishing() {
    let cfg = configs().join("car_boat_narrow_memberships.json");
    let out = qconcepts(&[
        "compare-fuzzy",
        "--x",
        "3",
        "--format",
        "json",
        "--config",
        cfg.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let report: CompareReport = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(report.memberships_vanish);
    assert!(report.rows.iter().all(|r| r.fuzzy_raw == Some(0.0)));
    assert!(report
        .rows
        .iter()
        .all(|r| r.quantum_probability == Some(0.5)));
}

#[test]
fn compare_fuzzy_at_car_center() {
    let out = qconcepts(&["compare-fuzzy", "--x", "5", "--format", "json"]);
    let report: CompareReport = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report.fuzzy.raw_score("car"), Some(1.0));
    assert_eq!(report.fuzzy.raw_score("boat"), Some(0.0));
    assert!(!report.decisions_agree);
    // the object itself sits between the concepts; shift it to x to see the
    // quantum side follow
    let out = qconcepts(&[
        "compare-fuzzy",
        "--x",
        "5",
        "--object-mu",
        "5",
        "--format",
        "json",
    ]);
    let report: CompareReport = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(report.quantum.probability("car").unwrap() > 0.9);
}

#[test]
fn compare_fuzzy_without_memberships_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(
        &dir,
        r#"{"concepts": [{"name": "car", "mu": 5, "sigma": 1}]}"#,
    );
    assert_eq!(
        qconcepts(&["compare-fuzzy", "--config", &cfg])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn interference_defaults_to_pi() {
    let default = stdout(&qconcepts(&["interference"]));
    let pi = stdout(&qconcepts(&[
        "interference",
        "--phase",
        "3.141592653589793",
    ]));
    assert_eq!(default, pi);
    assert!(default.contains("dephased      0.000000"));
    let out = qconcepts(&["interference", "--phase", "0", "--format", "json"]);
    let report: InterferenceReport = serde_json::from_str(&stdout(&out)).unwrap();
    assert!((report.dephased - report.constructive).abs() < 1e-12);
    assert!((report.constructive - 0.705_995_582_442_496_4).abs() < 1e-6);
}

#[test]
fn interference_needs_two_concepts() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(
        &dir,
        r#"{"concepts": [{"name": "car", "mu": 5, "sigma": 1}]}"#,
    );
    assert_eq!(
        qconcepts(&["interference", "--config", &cfg]).status.code(),
        Some(2)
    );
}

#[test]
fn shipped_configs_validate() {
    for name in ["car_boat.json", "car_boat_narrow_memberships.json"] {
        let text = std::fs::read_to_string(configs().join(name)).unwrap();
        let raw: ConceptConfig = serde_json::from_str(&text).unwrap();
        hilbert_concepts_cli::config::validate(&raw, &text, name).unwrap();
    }
}
