//! End-to-end tests of the binary: exit codes, report shapes, determinism.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use std::sync::atomic::{AtomicU64, Ordering};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_paramodular"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_json(output: &Output) -> serde_json::Value {
    assert!(
        output.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&output.stderr)
    );
    serde_json::from_slice(&output.stdout).expect("stdout is JSON")
}

static COUNTER: AtomicU64 = AtomicU64::new(0);

fn temp_file(name: &str, content: &str) -> PathBuf {
    let unique = COUNTER.fetch_add(1, Ordering::SeqCst);
    let path = std::env::temp_dir().join(format!(
        "paramodular-cli-test-{}-{unique}-{name}",
        std::process::id()
    ));
    std::fs::write(&path, content).unwrap();
    path
}

fn shipped_table() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data/dim_tables.csv")
}

const IIA_JSON: &str = r#"{
    "dimension": 4,
    "basis": ["e1", "e2", "e3", "e4"],
    "frobenius": [
        {"monomial": {"chi": 2, "sigma": 1}, "weight": 0},
        {"monomial": {"chi": 1, "sigma": 1}, "weight": -1},
        {"monomial": {"chi": 1, "sigma": 1}, "weight": 1},
        {"monomial": {"sigma": 1}, "weight": 0}
    ],
    "N": [[0,0,0,0],[0,0,1,0],[0,0,0,0],[0,0,0,0]],
    "base_weight": 0
}"#;

const SCENARIO_JSON: &str = r#"{
    "prime_p": 3,
    "prime_ell": 5,
    "coefficient_weight": 0,
    "coefficient_fiber_dim": 1,
    "sigma_size": 7,
    "contributions": [
        {
            "id": "f",
            "arthur_type": "general",
            "pi_infty": "H",
            "local_at_p": {"kind": "ramified", "rep_type": "IIa", "chi": "1", "sigma": "1"},
            "galois_dim": 4,
            "multiplicity": 1
        }
    ],
    "mazur": {
        "n_distinct_frobenius_eigenvalues": 4,
        "irreducible": true,
        "unramified_mod_ell": true
    }
}"#;

#[test]
fn tree_build_reports_six_vertices() {
    let out = run(&[
        "--format",
        "json",
        "tree",
        "build",
        "--prime",
        "2",
        "--radius",
        "1",
        "--root-kind",
        "first",
    ]);
    let report = stdout_json(&out);
    assert_eq!(report["results"]["vertex_count"], 6);
    assert_eq!(report["results"]["edge_count"], 5);
}

#[test]
fn wd_check_purity_on_generic_rep() {
    let file = temp_file("iia.json", IIA_JSON);
    let out = run(&["--format", "json", "wd", "check-purity", file.to_str().unwrap()]);
    let report = stdout_json(&out);
    assert_eq!(report["results"]["pure"], true);
    assert_eq!(report["results"]["n_rank"], 1);

    // table output mentions the verdict too
    let out = run(&["wd", "check-purity", file.to_str().unwrap()]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("pure: true"));
}

#[test]
fn wd_check_purity_flags_degenerate_monodromy() {
    let degenerate = IIA_JSON.replace("[0,0,1,0]", "[0,0,0,0]");
    let file = temp_file("degenerate.json", &degenerate);
    let out = run(&["--format", "json", "wd", "check-purity", file.to_str().unwrap()]);
    let report = stdout_json(&out);
    assert_eq!(report["results"]["pure"], false);
}

#[test]
fn ledger_run_full_report_and_determinism() {
    let file = temp_file("scenario.json", SCENARIO_JSON);
    let args = ["--format", "json", "ledger", "run", file.to_str().unwrap()];
    let first = run(&args);
    let second = run(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout, "reports must be byte-identical");

    let report = stdout_json(&first);
    assert_eq!(report["results"]["alpha_rank"], 1);
    assert_eq!(report["results"]["weight_monodromy_ok"], true);
    assert_eq!(report["results"]["component_group"], "0");
    assert_eq!(report["results"]["mazur"], "LevelLoweringForced");
    assert_eq!(report["results"]["weight_profile"]["2"], 1);
    assert_eq!(report["results"]["weight_profile"]["3"], 2);
    assert_eq!(report["results"]["weight_profile"]["4"], 1);
}

#[test]
fn ledger_localize_filters_contributions() {
    let file = temp_file("scenario2.json", SCENARIO_JSON);
    let out = run(&[
        "--format",
        "json",
        "ledger",
        "run",
        file.to_str().unwrap(),
        "--localize",
        "nonexistent",
    ]);
    let report = stdout_json(&out);
    assert_eq!(report["results"]["total_galois_dim"], 0);
    assert_eq!(report["results"]["alpha_rank"], 0);
}

#[test]
fn mazur_check_verdicts() {
    let out = run(&[
        "--format",
        "json",
        "mazur",
        "check",
        "--distinct-eigenvalues",
        "4",
        "--irreducible",
        "true",
        "--unramified-mod-ell",
        "true",
        "--component-group-trivial",
        "true",
    ]);
    let report = stdout_json(&out);
    assert_eq!(report["results"]["verdict"], "LevelLoweringForced");

    let out = run(&[
        "--format",
        "json",
        "mazur",
        "check",
        "--distinct-eigenvalues",
        "4",
        "--irreducible",
        "false",
        "--unramified-mod-ell",
        "true",
        "--component-group-trivial",
        "true",
    ]);
    let report = stdout_json(&out);
    assert_eq!(
        report["results"]["verdict"],
        "HypothesisFail(irreducibility)"
    );
}

#[test]
fn dims_verify_empty_table_passes_with_zero_checks() {
    let file = temp_file("empty.csv", "kind,k,j,level,p,value,source\n");
    let out = run(&["--format", "json", "dims", "verify", "--table", file.to_str().unwrap()]);
    let report = stdout_json(&out);
    assert_eq!(report["results"]["checks_run"], 0);
    assert_eq!(report["results"]["failures"], 0);
}

#[test]
fn dims_verify_shipped_table_passes() {
    let table = shipped_table();
    let out = run(&["--format", "json", "dims", "verify", "--table", table.to_str().unwrap()]);
    let report = stdout_json(&out);
    assert_eq!(report["results"]["failures"], 0);
    assert!(report["results"]["checks_run"].as_u64().unwrap() > 0);
}

#[test]
fn dims_verify_exits_nonzero_on_violation() {
    let file = temp_file(
        "wrong.csv",
        "kind,k,j,level,p,value,source\nclassical,2,,p,11,7,wrong on purpose\n",
    );
    let out = run(&["dims", "verify", "--table", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn dims_ibukiyama_constant_forms() {
    let table = shipped_table();
    let out = run(&[
        "--format",
        "json",
        "dims",
        "ibukiyama",
        "--k",
        "0",
        "--j",
        "3",
        "--prime",
        "2",
        "--table",
        table.to_str().unwrap(),
    ]);
    let report = stdout_json(&out);
    assert_eq!(report["results"]["dimension"], 1);
    // the odd-j cokernel line is surfaced as a warning
    assert!(!report["warnings"].as_array().unwrap().is_empty());
}

#[test]
fn dims_ibukiyama_missing_record_is_domain_error() {
    let table = shipped_table();
    let out = run(&[
        "dims",
        "ibukiyama",
        "--k",
        "0",
        "--j",
        "4",
        "--prime",
        "2",
        "--table",
        table.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("missing dimension record"));
}

#[test]
fn usage_errors_exit_2() {
    let out = run(&["tree", "build", "--prime", "2", "--bogus-flag"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn dot_export_writes_files() {
    let dir = std::env::temp_dir();
    let dot = dir.join(format!("paramodular-test-tree-{}.dot", std::process::id()));
    let out = run(&[
        "tree",
        "build",
        "--prime",
        "2",
        "--radius",
        "1",
        "--root-kind",
        "first",
        "--dot",
        dot.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let content = std::fs::read_to_string(&dot).unwrap();
    assert!(content.starts_with("graph biregular_tree {"));
    let _ = std::fs::remove_file(&dot);
}
