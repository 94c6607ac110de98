use std::process::{Command, Output};

fn annigraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_annigraph"))
        .args(args)
        .env_remove("ANNIGRAPH_BUDGET_MS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 stdout")
}

#[test]
fn ag_of_z12_as_dot() {
    let o = annigraph(&["graph", "--kind", "ag", "zn:12", "--format", "dot"]);
    assert_eq!(o.status.code(), Some(0));
    let dot = stdout(&o);
    assert!(dot.starts_with("graph AG {\n"));
    assert!(dot.ends_with("}\n"));
    let vertices = dot
        .lines()
        .filter(|l| l.ends_with(';') && !l.contains("--"))
        .count();
    let edges = dot.lines().filter(|l| l.contains(" -- ")).count();
    assert_eq!((vertices, edges), (4, 3));
}

#[test]
fn graph_json_matches_dot() {
    let o = annigraph(&["graph", "zn:12", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["vertices"].as_array().unwrap().len(), 4);
    assert_eq!(v["edges"].as_array().unwrap().len(), 3);
}

#[test]
fn genus_of_catalog_graphs() {
    let o = annigraph(&["genus", "cat:k5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "exact 1\n");
    let o = annigraph(&["genus", "cat:km:3:3"]);
    assert_eq!(stdout(&o), "exact 1\n");
}

#[test]
fn genus_json_witness_is_per_vertex() {
    let o = annigraph(&["genus", "cat:k4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["status"], "exact");
    assert_eq!(v["upper"], 0);
    let w = v["witness"].as_array().unwrap();
    assert_eq!(w.len(), 4);
    assert!(w.iter().all(|r| r.as_array().unwrap().len() == 3));
}

#[test]
fn exhausted_budget_exits_3() {
    let o = annigraph(&["genus", "cat:k9", "--budget-nodes", "1"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).starts_with("budget_exhausted"));
}

#[test]
fn invalid_specs_exit_2() {
    for spec in ["zn:x", "cat:nope", "prod:(zn:2", "zn:1", "gf:4:1,1"] {
        let o = annigraph(&["info", spec]);
        assert_eq!(o.status.code(), Some(2), "{spec}");
        assert!(!o.stderr.is_empty());
    }
    let o = annigraph(&["verify", "--suite", "everything"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn parse_errors_cite_position() {
    let o = annigraph(&["info", "zn:x"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("position 3"));
    let o = annigraph(&["info", "cat:nope"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("f2xy_x2y2"));
}

#[test]
fn info_reports_classification() {
    let o = annigraph(&["info", "cat:f2xy_x2y2"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["ideal_count"], 7);
    assert_eq!(v["is_gorenstein"], true);
    assert_eq!(v["is_spir"], false);
    assert_eq!(v["vdim_profile"], serde_json::json!([2, 1]));
}

#[test]
fn ideals_lists_lattice() {
    let o = annigraph(&["ideals", "zn:8"]);
    let text = stdout(&o);
    let names: Vec<&str> = text.lines().map(|l| l.split('\t').nth(1).unwrap()).collect();
    assert_eq!(names, ["(0)", "(4)", "(2)", "(1)"]);
}

#[test]
fn verify_all_on_builtin_corpus_passes() {
    let o = annigraph(&["verify", "--suite", "all"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stdout));
    let text = stdout(&o);
    assert!(text.contains("summary:"));
    assert!(text.contains("0 fail"));
}

#[test]
fn verify_formats() {
    let o = annigraph(&["verify", "--suite", "lemmas", "--format", "json", "zn:8"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v
        .as_array()
        .unwrap()
        .iter()
        .any(|r| r["check"] == "principal_subideal_count"));
    let o = annigraph(&["verify", "--suite", "lemmas", "--format", "csv", "zn:8"]);
    assert!(stdout(&o).starts_with("check,ring,fingerprint,status,reason,witness\n"));
}

#[test]
fn output_is_deterministic() {
    let args = [
        "verify",
        "--suite",
        "all",
        "--format",
        "json",
        "zn:12",
        "cat:f2xy_x2y2",
    ];
    let a = annigraph(&args);
    let b = annigraph(&args);
    assert_eq!(a.stdout, b.stdout);
    let c = annigraph(&[
        "--threads",
        "1",
        "verify",
        "--suite",
        "all",
        "--format",
        "json",
        "zn:12",
        "cat:f2xy_x2y2",
    ]);
    assert_eq!(a.stdout, c.stdout);
}

#[test]
fn timestamp_is_opt_in() {
    let plain = stdout(&annigraph(&["genus", "cat:k4"]));
    assert!(!plain.contains("generated"));
    let stamped = stdout(&annigraph(&["--timestamp", "genus", "cat:k4"]));
    assert!(stamped.contains("generated_unix"));
}

#[test]
fn out_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ag.dot");
    let o = annigraph(&["graph", "zn:8", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let dot = std::fs::read_to_string(&path).unwrap();
    assert!(dot.contains("\"(2)\" -- \"(4)\"") || dot.contains("\"(4)\" -- \"(2)\""));
}

#[test]
fn corpus_round_trips_through_table_specs() {
    let dir = tempfile::tempdir().unwrap();
    let o = annigraph(&["corpus", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let index: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("index.json")).unwrap()).unwrap();
    let rings = index["rings"].as_array().unwrap();
    assert_eq!(rings.len(), 23);
    for r in rings.iter().take(6) {
        let file = dir.path().join(r["file"].as_str().unwrap());
        let spec = format!("table:{}", file.display());
        let v: serde_json::Value = serde_json::from_str(&stdout(&annigraph(&["info", &spec]))).unwrap();
        assert_eq!(v["fingerprint"], r["fingerprint"], "{}", r["spec"]);
    }
}

#[test]
fn corpus_requires_out() {
    assert_eq!(annigraph(&["corpus"]).status.code(), Some(2));
}
