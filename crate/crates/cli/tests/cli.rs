use std::process::{Command, Output};

fn spiderweb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spiderweb"))
        .args(args)
        .env_remove("SPIDERWEB_OUT")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn gen_spider_web_dot_has_all_vertices() {
    let out = spiderweb(&["gen", "--family", "spiderweb", "--k", "2", "--n", "3", "--m", "3", "--format", "dot"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let nodes = text.lines().filter(|l| l.contains("[label=\"(")).count();
    assert_eq!(nodes, 24);
    assert_eq!(text.matches("->").count(), 48);
}

#[test]
fn components_flags_formula_discrepancy() {
    let out = spiderweb(&["components", "--family", "cycle", "--n", "4", "--m", "10"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("canonical: 2"));
    assert!(text.contains("residue_formula: 4"));
    assert!(text.contains("union_find: 2"));
    assert!(text.contains("discrepancy"));
}

#[test]
fn components_agree_on_de_bruijn() {
    let out = spiderweb(&["components", "--family", "debruijn", "--n", "2", "--m", "6"]);
    let text = stdout(&out);
    assert!(text.contains("canonical: 1"));
    assert!(!text.contains("discrepancy"));
}

#[test]
fn verify_spectra_passes_and_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let out = spiderweb(&[
        "verify", "spectra", "--k", "2", "--nmax", "4", "--mmax", "6",
        "--out-dir", dir.path().to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("verify.json")).unwrap()).unwrap();
    let entries = report.as_array().unwrap();
    assert!(!entries.is_empty());
    for e in entries {
        assert_eq!(e["suite"], "spectra");
        assert_eq!(e["status"], "pass", "{e}");
        assert!(e["runtime_ms"].as_f64().unwrap() >= 0.0);
    }
}

#[test]
fn invalid_parameters_exit_with_two() {
    assert_eq!(spiderweb(&["gen", "--family", "debruijn", "--k", "1"]).status.code(), Some(2));
    assert_eq!(spiderweb(&["gen", "--family", "spiderweb", "--n", "2"]).status.code(), Some(2));
    assert_eq!(spiderweb(&["verify", "spectra", "--k", "1"]).status.code(), Some(2));
    assert_eq!(spiderweb(&["converge", "--pairs", "2;x"]).status.code(), Some(2));
    assert_eq!(spiderweb(&["derange", "/nonexistent/graph.json"]).status.code(), Some(2));
}

#[test]
fn iso_exit_codes_follow_search_result() {
    let dir = tempfile::tempdir().unwrap();
    let path = |name: &str| dir.path().join(name).to_str().unwrap().to_owned();
    for (family, n, file) in [("debruijn", "2", "b.json"), ("schreier", "2", "g.json"), ("debruijn", "3", "b3.json")] {
        let out = spiderweb(&["gen", "--family", family, "--n", n, "--out", &path(file)]);
        assert!(out.status.success());
    }
    let weak = spiderweb(&["iso", &path("b.json"), &path("g.json"), "--kind", "weak"]);
    assert_eq!(weak.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_slice(&weak.stdout).unwrap();
    assert_eq!(json["status"], "found");
    let none = spiderweb(&["iso", &path("b.json"), &path("b3.json")]);
    assert_eq!(none.status.code(), Some(1));
    let bad = spiderweb(&["iso", &path("b.json"), &path("g.json"), "--kind", "sideways"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn product_and_derange_round_trip_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = |name: &str| dir.path().join(name).to_str().unwrap().to_owned();
    spiderweb(&["gen", "--family", "debruijn", "--n", "2", "--out", &path("b.json")]);
    spiderweb(&["gen", "--family", "cycle", "--n", "3", "--out", &path("c.dot"), "--format", "dot"]);
    let t = spiderweb(&["product", "tensor", &path("b.json"), &path("c.dot"), "--out", &path("t.json")]);
    assert!(t.status.success(), "{}", String::from_utf8_lossy(&t.stderr));
    let d = spiderweb(&["derange", &path("t.json")]);
    assert!(d.status.success());
    assert_eq!(stdout(&d), "derangement: 3\n");
}

#[test]
fn spectrum_numeric_column_matches() {
    let out = spiderweb(&["spectrum", "--k", "2", "--n", "1", "--m", "4", "--numeric"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().next(), Some("p,q,value,multiplicity,weight,numeric_multiplicity"));
    assert!(text.contains("1,2,0,6,3/4,6"));
}

#[test]
fn converge_emits_one_row_per_radius() {
    let out = spiderweb(&["converge", "--pairs", "2,2;4,4", "--rmax", "1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 1 + 2 * 2);
    assert!(text.contains("4,4,1,1,"));
}
