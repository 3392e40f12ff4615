//! End-to-end tests of the command-line interface: argument handling,
//! output shapes in all three formats, schema conformance of every JSON
//! document, exit codes, and stream separation.

use bhix_cli::schema::{validate, OutputKind};
use bhix_cli::{run_from, EXIT_DISCONNECTED, EXIT_OK, EXIT_PARSE, EXIT_TOO_LARGE};
use std::io::Write as _;
use std::process::Command;

/// Runs the CLI in-process, returning (exit code, stdout, stderr).
fn run(args: &[&str]) -> (i32, String, String) {
    let mut argv = vec!["bhix"];
    argv.extend_from_slice(args);
    let mut out: Vec<u8> = Vec::new();
    let mut err: Vec<u8> = Vec::new();
    let code = run_from(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).expect("stdout utf8"),
        String::from_utf8(err).expect("stderr utf8"),
    )
}

fn parse_json(s: &str) -> serde_json::Value {
    serde_json::from_str(s.trim()).unwrap_or_else(|e| panic!("bad JSON {e}: {s}"))
}

#[test]
fn compute_star_reports_exact_values() {
    let (code, out, _) = run(&["compute", "--family", "star", "--n", "4"]);
    assert_eq!(code, EXIT_OK);
    validate(OutputKind::Compute, &out).expect("schema");
    let v = parse_json(&out);
    assert_eq!(v["n"], serde_json::json!(4));
    assert_eq!(v["m"], serde_json::json!(3));
    assert!((v["bh_spectral"].as_f64().unwrap() - 8.25).abs() < 1e-9);
    assert!((v["bh_distance"].as_f64().unwrap() - 8.25).abs() < 1e-9);
    assert!((v["kirchhoff"].as_f64().unwrap() - 9.0).abs() < 1e-9);
    assert_eq!(v["wiener"], serde_json::json!(9));
    assert_eq!(v["zagreb_m1"], serde_json::json!(12));
    assert_eq!(v["forgotten_f"], serde_json::json!(30));
    assert_eq!(v["triangles"], serde_json::json!(0));
    assert_eq!(v["tau"], serde_json::json!("1"));
    assert!((v["spectral_ratio"].as_f64().unwrap() - 4.0).abs() < 1e-9);
}

#[test]
fn compute_formats_agree_on_the_same_graph() {
    let (code, json_out, _) = run(&["compute", "--family", "cycle", "--n", "5"]);
    assert_eq!(code, EXIT_OK);
    let v = parse_json(&json_out);

    let (code, csv_out, _) = run(&["compute", "--family", "cycle", "--n", "5", "--format", "csv"]);
    assert_eq!(code, EXIT_OK);
    let mut lines = csv_out.lines();
    let header: Vec<&str> = lines.next().expect("header").split(',').collect();
    let row: Vec<&str> = lines.next().expect("row").split(',').collect();
    assert_eq!(header.len(), row.len());
    let idx = header.iter().position(|h| *h == "bh_spectral").unwrap();
    let csv_bh: f64 = row[idx].parse().expect("csv float");
    assert!((csv_bh - v["bh_spectral"].as_f64().unwrap()).abs() < 1e-9);

    let (code, text_out, _) = run(&[
        "compute", "--family", "cycle", "--n", "5", "--format", "text",
    ]);
    assert_eq!(code, EXIT_OK);
    assert!(text_out.contains("bh_spectral"));
    // C5 is vertex-transitive with tau = 5.
    assert!(text_out.lines().any(|l| l.starts_with("tau") && l.ends_with('5')));
}

#[test]
fn compute_reads_edge_list_files() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = dir.path().join("path4.txt");
    let mut f = std::fs::File::create(&path).expect("create");
    writeln!(f, "# a path on four vertices").unwrap();
    writeln!(f, "4 3").unwrap();
    writeln!(f, "0 1").unwrap();
    writeln!(f, "1 2").unwrap();
    writeln!(f, "2 3").unwrap();
    drop(f);
    let (code, out, _) = run(&["compute", "--edges", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    let v = parse_json(&out);
    assert_eq!(v["wiener"], serde_json::json!(10));
    // Same graph via graph6 literal gives the identical document.
    let (code2, out2, _) = run(&["compute", "--graph6", "Ch"]);
    assert_eq!(code2, EXIT_OK);
    assert_eq!(out, out2);
}

#[test]
fn compute_rejects_ambiguous_and_missing_sources() {
    let (code, _, err) = run(&["compute"]);
    assert_eq!(code, EXIT_PARSE);
    assert!(err.contains("exactly one"));
    let (code, _, _) = run(&["compute", "--graph6", "Ch", "--family", "star", "--n", "4"]);
    assert_eq!(code, EXIT_PARSE);
    let (code, _, err) = run(&["compute", "--family", "star"]);
    assert_eq!(code, EXIT_PARSE);
    assert!(err.contains("requires --n"));
    let (code, _, _) = run(&["compute", "--family", "nosuch", "--n", "4"]);
    assert_eq!(code, EXIT_PARSE);
}

#[test]
fn compute_on_disconnected_graph_reports_partial_data() {
    // Two disjoint edges: n=4, m=2.
    let (code, out, err) = run(&["compute", "--graph6", "C`"]);
    assert_eq!(code, EXIT_DISCONNECTED);
    validate(OutputKind::ComputeDisconnected, &out).expect("schema");
    let v = parse_json(&out);
    assert_eq!(v["connected"], serde_json::json!(false));
    assert_eq!(v["n"], serde_json::json!(4));
    assert_eq!(v["m"], serde_json::json!(2));
    assert_eq!(v["zagreb_m1"], serde_json::json!(4));
    assert_eq!(v["tau"], serde_json::json!("0"));
    assert!(v.get("bh_spectral").is_none());
    assert!(err.contains("disconnected"));
}

#[test]
fn verify_bounds_single_graph_holds_everywhere() {
    let (code, out, _) = run(&["verify-bounds", "--family", "complete", "--n", "5"]);
    assert_eq!(code, EXIT_OK);
    validate(OutputKind::BoundsSingle, &out).expect("schema");
    let v = parse_json(&out);
    assert_eq!(v["all_hold"], serde_json::json!(true));
    let reports = v["reports"].as_array().unwrap();
    // Four fixed bounds + four power-mean exponents + the two-sided
    // spanning-tree bound + the deviation bound.
    assert_eq!(reports.len(), 12);
    assert!(reports
        .iter()
        .all(|r| r["equality"] == serde_json::json!(true)));
    // The complete graph carries the cubic-trace discrepancy note.
    let c32 = reports
        .iter()
        .find(|r| r["bound_id"] == serde_json::json!("C3_2"))
        .unwrap();
    assert!(c32["note"].as_str().unwrap().contains("trace"));
    assert!(c32["rhs_alt"].is_number());
}

#[test]
fn verify_bounds_accepts_custom_exponent_grid() {
    let (code, out, _) = run(&[
        "verify-bounds",
        "--family",
        "path",
        "--n",
        "6",
        "--p",
        "1/2,3",
    ]);
    assert_eq!(code, EXIT_OK);
    validate(OutputKind::BoundsSingle, &out).expect("schema");
    let v = parse_json(&out);
    let grid = v["p_grid"].as_array().unwrap();
    assert_eq!(grid.len(), 2);
    assert!((grid[0].as_f64().unwrap() - 0.5).abs() < 1e-12);
    let t33_count = v["reports"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| r["bound_id"] == serde_json::json!("T3_3"))
        .count();
    assert_eq!(t33_count, 2);
    let (code, _, _) = run(&[
        "verify-bounds", "--family", "path", "--n", "6", "--p", "0",
    ]);
    assert_eq!(code, EXIT_PARSE);
}

#[test]
fn verify_bounds_exhaustive_sweep_is_clean() {
    let (code, out, _) = run(&["verify-bounds", "--exhaustive", "--n", "4"]);
    assert_eq!(code, EXIT_OK);
    validate(OutputKind::BoundsSweep, &out).expect("schema");
    let v = parse_json(&out);
    assert_eq!(v["masks_total"], serde_json::json!(64));
    assert_eq!(v["connected_graphs"], serde_json::json!(38));
    assert_eq!(v["holds_all"], serde_json::json!(true));
    assert_eq!(v["equality_certification_ok"], serde_json::json!(true));
    assert_eq!(v["violations"].as_array().unwrap().len(), 0);
    // Mixing a graph source into the sweep is rejected.
    let (code, _, _) = run(&[
        "verify-bounds",
        "--exhaustive",
        "--n",
        "4",
        "--graph6",
        "Ch",
    ]);
    assert_eq!(code, EXIT_PARSE);
}

#[test]
fn scan_trees_certifies_small_orders() {
    let (code, out, _) = run(&["scan", "trees", "--n", "7"]);
    assert_eq!(code, EXIT_OK);
    validate(OutputKind::ScanTrees, &out).expect("schema");
    let v = parse_json(&out);
    assert_eq!(v["tree_count"], serde_json::json!(11));
    assert_eq!(v["conjecture_verified"], serde_json::json!(true));
    assert!(v["min_value"].as_f64().unwrap() < v["max_value"].as_f64().unwrap());
    // Below the scan's smallest meaningful order: usage error.
    let (code, _, _) = run(&["scan", "trees", "--n", "4"]);
    assert_eq!(code, EXIT_PARSE);
}

#[test]
fn scan_t52_and_diameter2_and_families_verify() {
    let (code, out, _) = run(&["scan", "t52", "--n", "8"]);
    assert_eq!(code, EXIT_OK);
    validate(OutputKind::ScanT52, &out).expect("schema");
    assert_eq!(parse_json(&out)["verified"], serde_json::json!(true));

    let (code, out, _) = run(&["scan", "diameter2", "--n", "4", "--workers", "1"]);
    assert_eq!(code, EXIT_OK);
    validate(OutputKind::ScanDiameter2, &out).expect("schema");
    assert_eq!(parse_json(&out)["verified"], serde_json::json!(true));

    let (code, out, _) = run(&["scan", "families", "--n-max", "8"]);
    assert_eq!(code, EXIT_OK);
    validate(OutputKind::ScanFamilies, &out).expect("schema");
    let v = parse_json(&out);
    assert_eq!(v["verified"], serde_json::json!(true));
    assert_eq!(v["factorizations_exact"], serde_json::json!(true));
}

#[test]
fn scan_rejects_orders_above_hard_caps() {
    let (code, _, err) = run(&["scan", "diameter2", "--n", "9"]);
    assert_eq!(code, EXIT_TOO_LARGE);
    assert!(err.contains("maximum"));
    let (code, _, _) = run(&["verify-bounds", "--exhaustive", "--n", "9"]);
    assert_eq!(code, EXIT_TOO_LARGE);
    let (code, _, _) = run(&["scan", "trees", "--n", "19"]);
    assert_eq!(code, EXIT_TOO_LARGE);
}

#[test]
fn product_worked_identities_match() {
    // (op, a, b, expected index of the constructed graph)
    let cases: [(&str, &str, Option<&str>, f64); 4] = [
        ("complement", "Ch", None, 13.0),
        ("join", "@", Some("B?"), 8.25),
        ("cartesian", "A_", Some("A_"), 2.25),
        ("lex", "A_", Some("A_"), 0.75),
    ];
    for (op, a, b, expected) in cases {
        let mut args = vec!["product", "--op", op, "--a", a];
        if let Some(b) = b {
            args.extend_from_slice(&["--b", b]);
        }
        let (code, out, _) = run(&args);
        assert_eq!(code, EXIT_OK, "{op}");
        validate(OutputKind::Product, &out).expect("schema");
        let v = parse_json(&out);
        assert_eq!(v["agree"], serde_json::json!(true), "{op}");
        assert!(
            (v["direct_bh"].as_f64().unwrap() - expected).abs() < 1e-9,
            "{op}: {out}"
        );
        assert!(
            (v["predicted_bh"].as_f64().unwrap() - expected).abs() < 1e-7,
            "{op}: {out}"
        );
    }
}

#[test]
fn product_reads_operands_from_files() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = dir.path().join("p2.g6");
    std::fs::write(&path, "# single edge\nA_\n").expect("write");
    let (code, out, _) = run(&[
        "product",
        "--op",
        "cartesian",
        "--a",
        path.to_str().unwrap(),
        "--b",
        "A_",
    ]);
    assert_eq!(code, EXIT_OK);
    let v = parse_json(&out);
    assert_eq!(v["result_graph6"], serde_json::json!("Cr"));
    assert!((v["direct_bh"].as_f64().unwrap() - 2.25).abs() < 1e-9);
}

#[test]
fn product_disconnected_results_exit_with_code_3() {
    // Complement of a complete graph is edgeless.
    let (code, _, err) = run(&["product", "--op", "complement", "--a", "Bw"]);
    assert_eq!(code, EXIT_DISCONNECTED);
    assert!(!err.is_empty());
    // Cartesian product with a disconnected factor.
    let (code, _, _) = run(&["product", "--op", "cartesian", "--a", "A?", "--b", "A_"]);
    assert_eq!(code, EXIT_DISCONNECTED);
    // Unary op with a stray --b.
    let (code, _, _) = run(&["product", "--op", "complement", "--a", "Ch", "--b", "A_"]);
    assert_eq!(code, EXIT_PARSE);
    // Binary op missing --b.
    let (code, _, _) = run(&["product", "--op", "join", "--a", "Ch"]);
    assert_eq!(code, EXIT_PARSE);
}

#[test]
fn graph6_bytes_with_backslashes_survive_json() {
    let g6 = r"D\w";
    let (code, out, _) = run(&["verify-bounds", "--graph6", g6]);
    assert_eq!(code, EXIT_OK);
    validate(OutputKind::BoundsSingle, &out).expect("schema");
    let v = parse_json(&out);
    assert_eq!(v["graph6"].as_str().unwrap(), g6);
}

#[test]
fn usage_errors_and_help_follow_clap_conventions() {
    let (code, _, err) = run(&["compute", "--no-such-flag"]);
    assert_eq!(code, EXIT_PARSE);
    assert!(err.contains("error"));
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("compute"));
    assert!(out.contains("verify-bounds"));
    let (code, _, _) = run(&[]);
    assert_eq!(code, EXIT_PARSE);
}

#[test]
fn spawned_binary_separates_streams_and_honours_tolerance_env() {
    let exe = env!("CARGO_BIN_EXE_bhix");
    // Stream separation: data on stdout parses as JSON even when a
    // diagnostic goes to stderr.
    let output = Command::new(exe)
        .args(["compute", "--graph6", "C`"])
        .output()
        .expect("spawn");
    assert_eq!(output.status.code(), Some(EXIT_DISCONNECTED));
    let stdout = String::from_utf8(output.stdout).unwrap();
    validate(OutputKind::ComputeDisconnected, &stdout).expect("schema");
    assert!(!output.stderr.is_empty());

    // The tolerance env var is reflected in the report.
    let output = Command::new(exe)
        .args(["product", "--op", "complement", "--a", "Ch"])
        .env("BHIX_TOLERANCE", "1e-2")
        .output()
        .expect("spawn");
    assert_eq!(output.status.code(), Some(EXIT_OK));
    let v: serde_json::Value =
        serde_json::from_str(String::from_utf8(output.stdout).unwrap().trim()).unwrap();
    assert!((v["tolerance"].as_f64().unwrap() - 1e-2).abs() < 1e-15);

    // A malformed tolerance is an input error.
    let output = Command::new(exe)
        .args(["product", "--op", "complement", "--a", "Ch"])
        .env("BHIX_TOLERANCE", "zero")
        .output()
        .expect("spawn");
    assert_eq!(output.status.code(), Some(EXIT_PARSE));
}
