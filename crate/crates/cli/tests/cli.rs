//! End-to-end runs of the `fock` binary: outputs, formats and exit codes.

use std::process::{Command, Output};

fn fock(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fock")).args(args).env_remove("FOCK_MAX_WEIGHT").output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

const FINAL_PAIR: [&str; 8] = ["rouquier", "--h", "3", "--w", "4", "--alpha", "13,7,6,4,3,1", "--beta"];

#[test]
fn rouquier_entry_and_q1_value() {
    let out = fock(&[&FINAL_PAIR[..], &["10,7,6,4,3,3,1"]].concat());
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "q^2+q^4-q^6\n");
    let out = fock(&[&FINAL_PAIR[..], &["10,7,6,4,3,3,1", "--at-q-1"]].concat());
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "1 (CONJECTURAL)\n");
}

#[test]
fn check_core() {
    let out = fock(&["rouquier", "--h", "5", "--w", "4", "--core", "32,27,22,17,16,12,11,7,6,2,1", "--check-core"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "4-Rouquier: yes\n");
    let out = fock(&["rouquier", "--h", "5", "--w", "5", "--core", "32,27,22,17,16,12,11,7,6,2,1", "--check-core"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout(&out), "5-Rouquier: no\n");
}

#[test]
fn formula_matrix_equals_computed_matrix() {
    let formula = fock(&["rouquier", "--h", "3", "--w", "4", "--format", "csv"]);
    let computed = fock(&["canon", "a2", "--h", "3", "--core", "10,7,4,1", "--weight", "4", "--format", "csv"]);
    assert_eq!(formula.status.code(), Some(0));
    assert_eq!(stdout(&formula), stdout(&computed));
    let formula = fock(&["rouquier", "--m", "3", "--w", "2", "--format", "csv"]);
    let computed = fock(&["canon", "a1", "--m", "3", "--core", "3,1,1", "--weight", "2", "--format", "csv"]);
    assert_eq!(stdout(&formula), stdout(&computed));
}

#[test]
fn error_exit_codes() {
    // Not Rouquier, not a core, malformed input, missing flag.
    assert_eq!(fock(&["rouquier", "--h", "3", "--w", "4", "--core", "7,4,1"]).status.code(), Some(2));
    assert_eq!(fock(&["canon", "a1", "--m", "3", "--core", "3", "--weight", "1"]).status.code(), Some(2));
    assert_eq!(fock(&["canon", "a1", "--m", "3", "--core", "2,x", "--weight", "1"]).status.code(), Some(2));
    assert_eq!(fock(&["canon", "a2", "--core", "2", "--weight", "1"]).status.code(), Some(2));
    assert_eq!(fock(&["verify", "nonsense"]).status.code(), Some(2));
}

#[test]
fn weight_guard() {
    let out = fock(&["canon", "a1", "--m", "2", "--core", "", "--weight", "7"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("FOCK_MAX_WEIGHT"));
    let raised = Command::new(env!("CARGO_BIN_EXE_fock"))
        .args(["canon", "a1", "--m", "2", "--core", "", "--weight", "7"])
        .env("FOCK_MAX_WEIGHT", "7")
        .output()
        .unwrap();
    assert_eq!(raised.status.code(), Some(0));
    let bad = Command::new(env!("CARGO_BIN_EXE_fock"))
        .args(["canon", "a1", "--m", "2", "--core", "", "--weight", "1"])
        .env("FOCK_MAX_WEIGHT", "lots")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let args = ["canon", "a2", "--h", "5", "--core", "12,11,7,6,2,1", "--weight", "3"];
    let first = fock(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, fock(&args).stdout);
}

#[test]
fn json_round_trips_through_render() {
    let dir = std::env::temp_dir().join(format!("fock-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("matrix.json");
    let base = ["canon", "a1", "--m", "3", "--core", "2,2,1,1", "--weight", "3", "--format"];
    let json = fock(&[&base[..], &["json"]].concat());
    std::fs::write(&path, &json.stdout).unwrap();
    let path = path.to_str().unwrap();
    assert_eq!(fock(&["render", path, "--format", "json"]).stdout, json.stdout);
    assert_eq!(fock(&["render", path, "--format", "csv"]).stdout, fock(&[&base[..], &["csv"]].concat()).stdout);
    assert_eq!(fock(&["render", path]).stdout, fock(&base[..base.len() - 1]).stdout);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn pretty_and_tex_layouts() {
    let pretty = stdout(&fock(&["canon", "a2", "--h", "5", "--core", "12,11,7,6,2,1", "--weight", "3"]));
    assert!(pretty.starts_with("# a2 canonical basis, h=5, core (12,11,7,6,2,1), weight 3: 22 rows, 10 columns\n"));
    let row = pretty.lines().find(|l| l.starts_with("(12,11,10,7,6,5,2,1) ")).unwrap();
    assert_eq!(
        row.split_whitespace().skip(1).collect::<Vec<_>>(),
        ["q^2-q^4", "1", ".", ".", ".", ".", ".", ".", ".", "."]
    );
    let tex =
        stdout(&fock(&["canon", "a2", "--h", "5", "--core", "12,11,7,6,2,1", "--weight", "3", "--format", "tex"]));
    assert!(tex.starts_with("\\begin{tabular}{lcccccccccc}"));
    assert!(tex.contains("$q^{2}-q^{4}$"));
}

#[test]
fn verify_targets() {
    for args in [
        &["verify", "dualpieri", "--max-size", "6", "--max-r", "3"][..],
        &["verify", "pieri", "--max-size", "6"],
        &["verify", "sscbv", "--h", "5", "--core", "12,11,7,6,2,1", "--weight", "3"],
        &["verify", "rouquier", "--h", "3", "--w", "4"],
        &["verify", "rouquier", "--m", "2", "--w", "3"],
        &["verify", "addrun", "--instances", "20"],
        &["verify", "samecoeff", "--instances", "20"],
        &["verify", "firstmain", "--h", "3", "--max-l", "3", "--max-w", "2", "--max-size", "4"],
    ] {
        let out = fock(args);
        assert_eq!(out.status.code(), Some(0), "{args:?}: {}", stdout(&out));
        assert!(stdout(&out).lines().all(|l| l.starts_with("PASS ")), "{args:?}");
    }
}

#[test]
fn verify_json_report() {
    let out = fock(&["verify", "sscbv", "--h", "5", "--core", "12,11,7,6,2,1", "--weight", "3", "--json"]);
    let reports: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(reports[0]["passed"], true);
    assert_eq!(reports[0]["checked"], 20);
    assert_eq!(reports[0]["failures"].as_array().unwrap().len(), 0);
}
