//! In-process tests of the command-line surface: artifact shapes, exit
//! codes, format sniffing, and byte-level determinism.

use std::io::Write as _;
use std::path::PathBuf;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("eigensum").chain(args.iter().copied());
    let code = eigensum_cli::run_with(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).expect("utf8 stdout"),
        String::from_utf8(err).expect("utf8 stderr"),
    )
}

fn temp_file(dir: &tempfile::TempDir, name: &str, content: &str) -> PathBuf {
    let path = dir.path().join(name);
    let mut f = std::fs::File::create(&path).unwrap();
    f.write_all(content.as_bytes()).unwrap();
    path
}

#[test]
fn spectrum_text_of_k3() {
    let dir = tempfile::tempdir().unwrap();
    let path = temp_file(&dir, "k3.g6", "Bw");
    let (code, out, err) = run(&["spectrum", "--in", path.to_str().unwrap()]);
    assert_eq!(code, 0, "stderr: {err}");
    assert_eq!(out, "[2, -1, -1]\n");
    // The reproducibility header rides on stderr in text mode.
    assert!(err.contains("\"command\":\"spectrum\""), "{err}");
}

#[test]
fn spectrum_edge_list_is_sniffed() {
    let dir = tempfile::tempdir().unwrap();
    let path = temp_file(&dir, "p3.edges", "3\n0 1\n1 2\n");
    let (code, out, _) = run(&["spectrum", "--in", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(out, "[1.414213562, 0, -1.414213562]\n");
}

#[test]
fn spectrum_json_artifact_shape() {
    let dir = tempfile::tempdir().unwrap();
    let path = temp_file(&dir, "k3.g6", "Bw");
    let (code, out, _) = run(&["spectrum", "--in", path.to_str().unwrap(), "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["n"], 3);
    assert_eq!(v["edge_count"], 3);
    assert_eq!(v["run"]["tool"], "eigensum");
    assert_eq!(v["run"]["seed"], 0);
    assert_eq!(v["run"]["args"]["graph6"], "Bw");
    let values = v["values"].as_array().unwrap();
    assert_eq!(values.len(), 3);
    assert!((values[0].as_f64().unwrap() - 2.0).abs() < 1e-9);
}

#[test]
fn spectrum_bad_input_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = temp_file(&dir, "junk.g6", "\x01\x02 not a graph");
    let (code, _, err) = run(&["spectrum", "--in", path.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error:"), "{err}");

    let (code, _, err) = run(&["spectrum", "--in", "/nonexistent/x.g6"]);
    assert_eq!(code, 2);
    assert!(err.contains("/nonexistent/x.g6"), "{err}");
}

#[test]
fn construct_certificate_round_trip() {
    let (code, out, err) = run(&["construct", "--k", "1"]);
    assert_eq!(code, 0, "stderr: {err}");
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let cert = &v["certificate"];
    assert_eq!(cert["k"], 1);
    assert_eq!(cert["n"], 21);
    assert_eq!(cert["report"]["passed"], true);
    let expect = (25.0 + 329f64.sqrt()) / 2.0;
    assert!((cert["value"].as_f64().unwrap() - expect).abs() < 1e-7);
    assert!(v.get("padded").is_none());
    assert!(err.contains("PASS"), "{err}");
}

#[test]
fn construct_padded_witness() {
    let (code, out, _) = run(&["construct", "--k", "1", "--n", "25"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["padded"]["n"], 25);
    // Isolated vertices leave mu1 + mu2 alone.
    let padded = v["padded"]["value"].as_f64().unwrap();
    let base = v["certificate"]["value"].as_f64().unwrap();
    assert!((padded - base).abs() < 1e-7);
    let witness = v["padded"]["witness_graph6"].as_str().unwrap();
    let g = eigensum::codec::from_graph6(witness).unwrap();
    assert_eq!(g.n(), 25);
}

#[test]
fn verify_all_passes_and_is_jsonl() {
    let (code, out, err) = run(&["verify", "--trials", "2"]);
    assert_eq!(code, 0, "stderr: {err}");
    let lines: Vec<&str> = out.lines().collect();
    assert!(lines.len() > 10);
    let first: serde_json::Value = serde_json::from_str(lines[0]).unwrap();
    assert_eq!(first["run"]["command"], "verify");
    let last: serde_json::Value = serde_json::from_str(lines[lines.len() - 1]).unwrap();
    assert_eq!(last["summary"]["verdict"], "PASS");
    for line in &lines[1..lines.len() - 1] {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert!(v["suite"].is_string(), "{line}");
        assert_eq!(v["report"]["passed"], true, "{line}");
    }
    assert!(err.contains("verify: PASS"), "{err}");
}

#[test]
fn verify_single_suite_filters() {
    let (code, out, _) = run(&["verify", "--suite", "mu1mu2", "--trials", "3"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    // Header, 5 canned + 3 random checks, summary.
    assert_eq!(lines.len(), 10);
    for line in &lines[1..lines.len() - 1] {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["suite"], "mu1mu2");
    }
}

#[test]
fn verify_unknown_suite_exits_2() {
    let (code, _, err) = run(&["verify", "--suite", "nope"]);
    assert_eq!(code, 2);
    assert!(err.contains("unknown suite"), "{err}");
}

#[test]
fn search_exhaustive_finds_diamond() {
    let (code, out, _) = run(&["search", "--n", "4"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let record = &v["record"];
    let expect = (1.0 + 17f64.sqrt()) / 2.0;
    assert!((record["value"].as_f64().unwrap() - expect).abs() < 1e-9);
    assert_eq!(record["method"], "exhaustive");
    assert_eq!(record["seed"], serde_json::Value::Null);
    assert_eq!(v["run"]["args"]["method"], "exhaustive");
}

#[test]
fn search_inline_vectors_match_preset() {
    let by_vectors = run(&["search", "--n", "4", "--alpha", "1", "--gamma", "1"]);
    let by_preset = run(&["search", "--n", "4", "--preset", "mu1+cmu1"]);
    assert_eq!(by_vectors.0, 0);
    assert_eq!(by_preset.0, 0);
    let a: serde_json::Value = serde_json::from_str(&by_vectors.1).unwrap();
    let b: serde_json::Value = serde_json::from_str(&by_preset.1).unwrap();
    assert_eq!(a["record"]["value"], b["record"]["value"]);
    assert_eq!(a["record"]["witness_graph6"], b["record"]["witness_graph6"]);
}

#[test]
fn search_form_file_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let text = r#"{"k":2,"alpha":[1.0,1.0],"beta":[0.0,0.0],"gamma":[0.0,0.0],"delta":[0.0,0.0]}"#;
    let path = temp_file(&dir, "form.json", text);
    let by_file = run(&["search", "--n", "4", "--form-file", path.to_str().unwrap()]);
    let by_default = run(&["search", "--n", "4"]);
    assert_eq!(by_file.0, 0, "stderr: {}", by_file.2);
    let a: serde_json::Value = serde_json::from_str(&by_file.1).unwrap();
    let b: serde_json::Value = serde_json::from_str(&by_default.1).unwrap();
    assert_eq!(a["record"], b["record"]);
}

#[test]
fn search_conflicting_form_spellings_exit_2() {
    let (code, _, err) = run(&["search", "--n", "4", "--preset", "mu1+mu2", "--alpha", "1"]);
    assert_eq!(code, 2);
    assert!(err.contains("choose one"), "{err}");
}

#[test]
fn search_exhaustive_over_cap_exits_2() {
    let (code, _, err) = run(&["search", "--n", "9", "--method", "exhaustive"]);
    assert_eq!(code, 2);
    assert!(err.contains("capped"), "{err}");
}

#[test]
fn search_warm_start_needs_stochastic() {
    let (code, _, err) = run(&["search", "--n", "4", "--method", "exhaustive", "--warm-start-gernert"]);
    assert_eq!(code, 2);
    assert!(err.contains("stochastic"), "{err}");
}

#[test]
fn search_stochastic_is_deterministic() {
    let args = ["search", "--n", "8", "--restarts", "8", "--steps", "50", "--seed", "5"];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(first.0, 0);
    assert_eq!(first.1, second.1, "stochastic artifacts must be byte-identical");
    let v: serde_json::Value = serde_json::from_str(&first.1).unwrap();
    assert_eq!(v["record"]["method"], "stochastic");
    assert_eq!(v["record"]["seed"], 5);
}

#[test]
fn phi_csv_shape() {
    let (code, out, _) = run(&["phi", "--n-list", "3,4,5"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    let header_at = lines
        .iter()
        .position(|l| !l.starts_with('#'))
        .expect("data after comments");
    assert_eq!(lines[header_at], "n,value,phi,method,seed,witness_graph6");
    let rows = &lines[header_at + 1..];
    assert_eq!(rows.len(), 3);
    let first: Vec<&str> = rows[0].split(',').collect();
    assert_eq!(first[0], "3");
    let value: f64 = first[1].parse().unwrap();
    assert!((value - 2f64.sqrt()).abs() < 1e-9, "max mu1+mu2 at n=3 is sqrt 2");
    let phi: f64 = first[2].parse().unwrap();
    assert!((phi - value / 3.0).abs() < 1e-12);
    assert_eq!(first[3], "exhaustive");
    assert_eq!(first[4], "", "exhaustive rows carry no seed");
}

#[test]
fn phi_range_equals_list() {
    let by_range = run(&["phi", "--n-range", "3..5"]);
    let by_list = run(&["phi", "--n-list", "3,4,5"]);
    assert_eq!(by_range.0, 0);
    assert_eq!(by_range.1, by_list.1, "resolved orders are echoed, not their spelling");
}

#[test]
fn phi_needs_exactly_one_order_source() {
    let (code, _, err) = run(&["phi"]);
    assert_eq!(code, 2);
    assert!(err.contains("--n-list"), "{err}");
    let (code, _, _) = run(&["phi", "--n-list", "3", "--n-range", "4..5"]);
    assert_eq!(code, 2);
    let (code, _, err) = run(&["phi", "--n-range", "9..3"]);
    assert_eq!(code, 2);
    assert!(err.contains("empty range"), "{err}");
}

#[test]
fn amplify_gernert_chain_holds() {
    let (code, out, err) = run(&["amplify", "--gernert-k", "1", "--N", "63"]);
    assert_eq!(code, 0, "stderr: {err}");
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["report"]["chain_holds"], true);
    assert_eq!(v["report"]["t"], 3);
    assert_eq!(v["report"]["N"], 63);
    assert_eq!(v["run"]["args"]["c_ref"], v["report"]["f_over_n"]);
    assert!(err.contains("chain holds"), "{err}");
}

#[test]
fn amplify_from_file() {
    let dir = tempfile::tempdir().unwrap();
    // K4 as an edge list.
    let path = temp_file(&dir, "k4.edges", "4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    let (code, out, _) = run(&["amplify", "--in", path.to_str().unwrap(), "--N", "12"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["report"]["n"], 4);
    assert_eq!(v["report"]["t"], 3);
    assert_eq!(v["report"]["chain_holds"], true);
}

#[test]
fn amplify_needs_a_source_graph() {
    let (code, _, err) = run(&["amplify", "--N", "63"]);
    assert_eq!(code, 2);
    assert!(err.contains("--in or --gernert-k"), "{err}");
}

#[test]
fn output_flag_routes_artifact_and_stays_out_of_header() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    let (code, out, _) = run(&["construct", "--k", "1", "--output", a.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.is_empty(), "artifact went to the file, stdout stays clean");
    let (code, _, _) = run(&["construct", "--k", "1", "--output", b.to_str().unwrap()]);
    assert_eq!(code, 0);
    let bytes_a = std::fs::read(&a).unwrap();
    let bytes_b = std::fs::read(&b).unwrap();
    assert_eq!(bytes_a, bytes_b, "the output path must not leak into the artifact");
}

#[test]
fn verify_seed_changes_instances_not_verdicts() {
    let one = run(&["verify", "--suite", "vertex-deletion", "--trials", "4", "--seed", "1"]);
    let two = run(&["verify", "--suite", "vertex-deletion", "--trials", "4", "--seed", "2"]);
    assert_eq!(one.0, 0);
    assert_eq!(two.0, 0);
    assert_ne!(one.1, two.1, "different seeds draw different instances");
}

#[test]
fn help_and_version_exit_0() {
    let (code, out, _) = run(&["--version"]);
    assert_eq!(code, 0);
    assert!(out.contains("eigensum"));
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("search"));
    let (code, _, _) = run(&["search", "--help"]);
    assert_eq!(code, 0);
    let (code, _, err) = run(&["frobnicate"]);
    assert_eq!(code, 2);
    assert!(!err.is_empty());
}
