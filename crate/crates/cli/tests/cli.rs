use std::process::{Command, Output};

fn schur(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schur"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn build_passes_on_small_instance() {
    for ring in ["classical", "quantum"] {
        let o = schur(&["build", "2", "3", "--ring", ring]);
        assert!(o.status.success(), "{}", stdout(&o));
    }
}

#[test]
fn basis_lists_pieces_and_writes_header() {
    let path = std::env::temp_dir().join(format!("schur-basis-{}.json", std::process::id()));
    let o = schur(&[
        "basis",
        "2",
        "2",
        "--ring",
        "classical",
        "--json",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(
        out.contains("[1, 1] (4): 1[1,1], E(1,2) 1[1,1], F(2,1) 1[1,1], E(1,2) F(2,1) 1[1,1]"),
        "{out}"
    );
    assert!(out.contains("count 10 rank 10 expected 10"));
    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(json["n"], 2);
    assert_eq!(json["ring"], "classical");
    assert_eq!(json["schema-version"], 1);
    assert_eq!(json["elements"].as_array().unwrap().len(), 10);
}

#[test]
fn basis_accepts_custom_orders() {
    let o = schur(&[
        "basis",
        "3",
        "2",
        "--order",
        "custom:12,13,23",
        "--f-order",
        "custom:12,13,23",
        "--side",
        "minus",
    ]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).contains("count 45 rank 45 expected 45"));
}

#[test]
fn straighten_emits_coordinates() {
    let o = schur(&[
        "straighten",
        "2",
        "2",
        "--expr",
        "F(2,1) E(1,2) 1[0,2]",
        "--check",
    ]);
    assert!(o.status.success());
    let json: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(json["agrees-with-linear-algebra"], true);
    assert_eq!(json["terms"][0]["element"], "1[0,2]");
    assert_eq!(json["terms"][0]["value"], "v + v^-1");
}

#[test]
fn verify_runs_both_suites() {
    let o = schur(&["verify", "2", "2"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert_eq!(stdout(&o).matches("suite, (2,2)").count(), 4);
}

#[test]
fn constants_specialize() {
    let o = schur(&["constants", "2", "2"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("specialization at v = 1: pass"));
}

#[test]
fn hecke_reports_rank() {
    let o = schur(&["hecke", "3"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).contains("count 6 rank 6 expected 6"));
}

#[test]
fn conjectures_are_report_only() {
    let o = schur(&["conjectures", "2", "2", "--kind", "pbw"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("pbw (2,2) quantum: count 10 rank 10 expected 10"));
}

#[test]
fn large_instances_need_the_flag() {
    let o = schur(&["build", "5", "5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("beyond the desk grid"));
}

#[test]
fn bad_expression_is_an_error() {
    let o = schur(&["straighten", "3", "2", "--expr", "E(1,2) 1[0,2]"]);
    assert_eq!(o.status.code(), Some(2));
}
