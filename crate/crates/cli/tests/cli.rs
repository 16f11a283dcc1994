use std::process::{Command, Output};

use grpdim_core::graph::GraphJson;
use grpdim_core::{build_graph, FiniteGroup, GraphFamily};
use serde_json::Value;

fn grpdim(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_grpdim"))
        .args(args)
        .env_remove("GRPDIM_ORACLE_CAP")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn compute_all_methods_agree_on_q8() {
    let out = grpdim(&["compute", "Q8", "--family", "reduced", "--method", "all"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["agree"], true);
    let results = v["results"].as_array().unwrap();
    assert_eq!(results.len(), 4);
    assert!(results.iter().all(|r| r["value"] == 6));
}

#[test]
fn compute_formula_reports_branch() {
    let out = grpdim(&[
        "compute",
        "Z6",
        "--family",
        "supergraph",
        "--method",
        "formula",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["value"], 4);
    assert_eq!(v["branch"], "cyclic_non_p");
}

#[test]
fn bad_input_exits_two() {
    assert_eq!(
        grpdim(&["compute", "badname", "--family", "power"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        grpdim(&["compute", "Z6", "--family", "nonsense"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        grpdim(&["compute", "Z6", "--family", "power", "--method", "formula"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        grpdim(&["verify", "--max-order", "721"]).status.code(),
        Some(2)
    );
    assert_eq!(
        grpdim(&["compute", "Z6", "--oracle-cap", "65"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn capacity_error_exits_two() {
    let out = grpdim(&["compute", "Z20", "--family", "power", "--method", "oracle"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("20"));
}

#[test]
fn oracle_cap_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_grpdim"))
        .args([
            "compute",
            "Z20",
            "--family",
            "supergraph",
            "--method",
            "oracle",
        ])
        .env("GRPDIM_ORACLE_CAP", "20")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["value"], 20 - 3);
}

#[test]
fn compute_text_format() {
    let out = grpdim(&["compute", "S3", "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().count() >= 10);
    assert!(text.lines().all(|l| l.starts_with("S3")));
}

#[test]
fn verify_small_catalog_writes_reports() {
    let dir = tempfile::tempdir().unwrap();
    let csv_path = dir.path().join("report.csv");
    let json_path = dir.path().join("report.json");
    let out = grpdim(&[
        "verify",
        "--max-order",
        "16",
        "--families",
        "all",
        "--methods",
        "formula,diameter2,oracle",
        "--csv",
        csv_path.to_str().unwrap(),
        "--json",
        json_path.to_str().unwrap(),
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stdout)
    );

    let csv = std::fs::read_to_string(&csv_path).unwrap();
    assert!(csv.ends_with('\n'));
    let mut reader = csv::Reader::from_reader(csv.as_bytes());
    assert_eq!(
        reader.headers().unwrap(),
        vec!["group", "n", "family", "method", "value", "branch", "millis", "match"]
    );
    assert!(reader.records().all(|r| &r.unwrap()[7] == "true"));

    let report: Value =
        serde_json::from_str(&std::fs::read_to_string(&json_path).unwrap()).unwrap();
    let rows = report["rows"].as_array().unwrap();
    assert_eq!(report["summary"]["mismatches"], 0);
    assert_eq!(report["summary"]["total"], rows.len());
    // power graph has no formula
    assert!(rows
        .iter()
        .filter(|r| r["family"] == "power")
        .all(|r| r["values"]["formula"] == "skipped"));
}

#[test]
fn verify_skips_oracle_above_cap() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let out = grpdim(&[
        "verify",
        "--max-order",
        "20",
        "--families",
        "enhanced",
        "--methods",
        "formula,vertexcover,oracle",
        "--json",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    for row in report["rows"].as_array().unwrap() {
        let skipped = row["values"]["oracle"] == "skipped";
        assert_eq!(skipped, row["n"].as_u64().unwrap() > 16);
    }
}

#[test]
fn verify_trivial_slice() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let out = grpdim(&[
        "verify",
        "--max-order",
        "1",
        "--json",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let rows = report["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 4);
    for row in rows {
        assert_eq!(row["group"], "Z1");
        for (_, v) in row["values"].as_object().unwrap() {
            assert!(*v == 0 || *v == "skipped");
        }
    }
}

#[test]
fn export_json_round_trips() {
    let out = grpdim(&["export", "Z4", "--family", "reduced", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(
        text,
        "{\"n\":4,\"edges\":[[0,1],[0,2],[0,3],[1,2],[2,3]]}\n"
    );

    for spec in ["S4", "Q16", "Z2xD8"] {
        let out = grpdim(&["export", spec, "--family", "enhanced"]);
        let parsed = GraphJson::parse(&String::from_utf8(out.stdout).unwrap()).unwrap();
        let group = FiniteGroup::from_descriptor(spec).unwrap();
        assert_eq!(parsed, build_graph(&group, GraphFamily::Enhanced));
    }
}

#[test]
fn export_dot_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s3.dot");
    let out = grpdim(&[
        "export",
        "S3",
        "--family",
        "supergraph",
        "--format",
        "dot",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let dot = std::fs::read_to_string(&path).unwrap();
    assert!(dot.starts_with("graph "));
    assert!(dot.ends_with("}\n"));
    assert_eq!(dot.matches("label=").count(), 6);
}

#[test]
fn export_io_failure_exits_two() {
    let out = grpdim(&[
        "export",
        "S3",
        "--family",
        "power",
        "--output",
        "/nonexistent/dir/x.json",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn ingests_cayley_table_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("table.txt");
    let d8 = FiniteGroup::from_descriptor("D8").unwrap();
    std::fs::write(&path, d8.to_cayley_text()).unwrap();
    let spec = format!("file:{}", path.display());

    let out = grpdim(&["export", &spec, "--family", "power", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let parsed = GraphJson::parse(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(parsed, build_graph(&d8, GraphFamily::Power));

    let out = grpdim(&["compute", &spec, "--family", "enhanced", "--method", "all"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["results"][0]["value"], 6);

    std::fs::write(&path, "3\n0 1 2\n1 1 0\n2 0 1\n").unwrap();
    assert_eq!(grpdim(&["compute", &spec]).status.code(), Some(2));
}
