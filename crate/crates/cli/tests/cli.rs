use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cumulant"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json_report(args: &[&str]) -> (Option<i32>, Value) {
    let o = run(args);
    (
        o.status.code(),
        serde_json::from_str(&stdout(&o)).expect("json report"),
    )
}

#[test]
fn chain_map_suite_passes() {
    let (code, report) = json_report(&["verify", "chain-map", "--degree", "8"]);
    assert_eq!(code, Some(0));
    assert_eq!(report["version"], "1");
    assert_eq!(report["convention"], "A");
    let entries = report["entries"].as_array().unwrap();
    assert!(entries
        .iter()
        .any(|e| e["check_name"] == "chain_map.stokes"));
    for e in entries {
        assert_eq!(e["status"], "pass", "{e}");
        assert!(e["parameters"].is_object());
        assert!(e["duration_ms"].is_u64());
    }
}

#[test]
fn ainfty_suite_passes_to_four() {
    let (code, report) = json_report(&[
        "verify", "--suite", "ainfty", "--n-max", "4", "--degree", "4",
    ]);
    assert_eq!(code, Some(0));
    let relations: Vec<&Value> = report["entries"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|e| e["check_name"] == "ainfty.relation")
        .collect();
    assert_eq!(relations.len(), 4);
}

#[test]
fn mirrored_convention_fails_with_witness() {
    let (code, report) = json_report(&[
        "verify",
        "ainfty",
        "--n-max",
        "2",
        "--degree",
        "2",
        "--sign-convention",
        "B",
    ]);
    assert_eq!(code, Some(1));
    assert_eq!(report["convention"], "B");
    let failed: Vec<&Value> = report["entries"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|e| e["status"] == "fail")
        .collect();
    assert!(!failed.is_empty());
    for e in failed {
        assert!(e["witness"]["witness_tuple"].is_array(), "{e}");
    }
}

#[test]
fn report_is_deterministic_and_written_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = run(&[
        "verify",
        "cube",
        "--n-max",
        "3",
        "--degree",
        "2",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).is_empty());
    let first: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let (_, second) = json_report(&["verify", "cube", "--n-max", "3", "--degree", "2"]);
    let strip = |v: &Value| -> Vec<(Value, Value, Value)> {
        v["entries"]
            .as_array()
            .unwrap()
            .iter()
            .map(|e| {
                (
                    e["check_name"].clone(),
                    e["parameters"].clone(),
                    e["status"].clone(),
                )
            })
            .collect()
    };
    assert_eq!(strip(&first), strip(&second));
}

#[test]
fn all_suites_text_format() {
    let o = run(&[
        "verify", "all", "--n-max", "3", "--degree", "3", "--format", "text",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("convention A\n"));
    assert!(text.trim_end().ends_with("0 failed"));
    for prefix in [
        "dga.",
        "chain_map.",
        "cumulants.",
        "ainfty.",
        "cube.",
        "formal.",
    ] {
        assert!(text.contains(&format!("PASS {prefix}")), "{prefix}");
    }
}

#[test]
fn out_of_range_is_usage_error() {
    for args in [
        &["verify", "formal", "--n-max", "5"][..],
        &["verify", "cube", "--n-max", "7"],
        &["verify", "dga", "--degree", "13"],
        &["verify", "dga", "--n-max", "0"],
        &["graph", "cube", "9"],
        &["graph", "polytope", "5"],
        &["cumulant", "7"],
        &["cumulant", "0"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(stderr(&o).contains("must be in"), "{args:?}");
    }
    let o = run(&["verify", "dga", "--sign-convention", "C"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn cube_graph_dot() {
    let o = run(&["graph", "cube", "3", "--format", "dot"]);
    assert_eq!(o.status.code(), Some(0));
    let dot = stdout(&o);
    assert!(dot.starts_with("graph G3 {"));
    assert_eq!(dot.matches(" [label=\"(").count(), 4);
    assert_eq!(dot.matches(" -- ").count(), 4);
    assert!(dot.contains("v0 -- v2 [label=\"p2(ab,c)\"]"));
}

#[test]
fn polytope_graph_is_hexagon() {
    let o = run(&["graph", "polytope", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let dot = stdout(&o);
    assert_eq!(dot.matches(" -> ").count(), 6);
    assert!(dot.contains("label=\"p1((ab)c)\""));
    assert!(dot.contains("label=\"(p1(a)p1(b))p1(c)\""));
}

#[test]
fn symbolic_cumulant() {
    let o = run(&["cumulant", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "K3 = e(abc) - e(a)e(bc) - e(ab)e(c) + e(a)e(b)e(c)\n"
    );
}

#[test]
fn evaluated_cumulant() {
    let o = run(&["cumulant", "2", "--inputs", "t ; dt"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("+ e(ab) = (0, 0; 1/2 dt)"), "{out}");
    assert!(out.ends_with("total = (0, 0; 1/2 dt)\n"), "{out}");
    let o = run(&["cumulant", "1", "--inputs", "1"]);
    assert!(stdout(&o).ends_with("total = (1, 1; 0 dt)\n"));
}

#[test]
fn bad_inputs_exit_two() {
    let o = run(&["cumulant", "2", "--inputs", "t ; d*"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("position 4"));
    let o = run(&["cumulant", "2", "--inputs", "t"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("expected 2 inputs, got 1"));
}
