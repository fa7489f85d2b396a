use std::process::{Command, Output};

fn starspec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_starspec"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let o = starspec(&full);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(stdout(&o).trim()).unwrap()
}

#[test]
fn constructs_complete_bipartite() {
    let o = starspec(&["construct", "kb", "2", "9"]);
    assert!(o.status.success());
    let g6 = stdout(&o).trim().to_string();
    let info = json(&["info", &g6]);
    assert_eq!(info["order"], 11);
    assert_eq!(info["edges"], 18);
    assert_eq!(info["bipartition_sizes"], serde_json::json!([2, 9]));
}

#[test]
fn bipartite_bound_is_attained_by_complete_bipartite() {
    let r = json(&["bound", "t18", "11", "3"]);
    let v = r["value"]["value"].as_f64().unwrap();
    assert!((v - 18f64.sqrt()).abs() < 1e-12);
    let kb = stdout(&starspec(&["construct", "kb", "2", "9"]));
    assert_eq!(r["attained_by"], kb.trim());
    let rho = json(&["rho", kb.trim()]);
    assert!((rho["rho"].as_f64().unwrap() - v).abs() < 1e-9);
}

#[test]
fn descriptive_alias_matches_grammar_token() {
    assert_eq!(json(&["bound", "t17", "11", "2", "2"]), json(&["bound", "spectral-radius", "11", "2", "2"]));
}

#[test]
fn freeness_of_a_path() {
    // S_2 + S_1 needs five vertices; a perfect matching of P4 is 2S_1.
    assert_eq!(stdout(&starspec(&["free", "Ch", "2,1"])).trim(), "true");
    assert_eq!(stdout(&starspec(&["free", "Ch", "1,1"])).trim(), "false");
}

#[test]
fn exact_threshold() {
    let r = json(&["threshold", "connected", "2,2"]);
    assert_eq!(r["value"]["numerator"], "1936");
    assert_eq!(r["value"]["denominator"], "1");
}

#[test]
fn reads_graphs_from_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("graphs.g6");
    std::fs::write(&path, "C~\nCh\n").unwrap();
    let o = starspec(&["rho", path.to_str().unwrap()]);
    assert!(o.status.success());
    let lines: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(lines[0], "3");
    assert_eq!(lines[1], "1.61803398875");
}

#[test]
fn out_file_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("search.jsonl");
    let o = starspec(&["--out", path.to_str().unwrap(), "search", "7", "2,2"]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    let v: serde_json::Value = serde_json::from_str(text.trim()).unwrap();
    assert_eq!(v["count_enumerated"], 1044);
    assert_eq!(v["forest"], "2:2,2");
}

#[test]
fn json_output_is_byte_identical_across_runs() {
    for args in [
        &["--json", "search", "7", "2,1", "connected"][..],
        &["--json", "conjecture", "6", "2,2"][..],
        &["--json", "spectrum", "E@\\w"][..],
    ] {
        let a = starspec(args);
        let b = starspec(args);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn domain_error_exits_one() {
    let o = starspec(&["rho", "zzz"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));
    let o = starspec(&["threshold", "general", "1,1"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn usage_error_exits_two() {
    assert_eq!(starspec(&["bogus"]).status.code(), Some(2));
    assert_eq!(starspec(&["bound", "t18", "eleven", "3"]).status.code(), Some(2));
    assert_eq!(starspec(&["search", "7", "0,1"]).status.code(), Some(2));
}

#[test]
fn passing_suite_exits_zero() {
    let o = starspec(&["verify", "lemma23", "3", "3", "16"]);
    assert_eq!(o.status.code(), Some(0));
    let o = starspec(&["verify", "edge", "7", "2,2"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn violated_suite_exits_three() {
    // n = 6 is below the conjecture's range and several 2S_2-free graphs exceed it.
    let o = starspec(&["verify", "conjecture", "6", "2,2"]);
    assert_eq!(o.status.code(), Some(3));
    let o = starspec(&["--json", "verify", "conjecture", "6", "2,2"]);
    let t: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert!(!t["exceeding"].as_array().unwrap().is_empty());
}

#[test]
fn non_bipartite_class_is_a_domain_error() {
    assert_eq!(starspec(&["verify", "bipartite", "6", "2,2", "all"]).status.code(), Some(1));
}
