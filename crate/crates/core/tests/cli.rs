use std::path::Path;
use std::process::{Command, Output};

fn forge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopf-forge")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn build(dir: &Path, name: &str, group: &str, auto: &str) -> std::path::PathBuf {
    let p = dir.join(name);
    let o = forge(&["build-double", "--group", group, "--auto", auto, "--out", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    p
}

#[test]
fn build_double_writes_dim_12() {
    let dir = tempfile::tempdir().unwrap();
    let p = build(dir.path(), "k3.json", "sn:3", "w0");
    let text = std::fs::read_to_string(p).unwrap();
    assert!(text.contains("\"dim\":12"));
}

#[test]
fn conj_longest_word_matches_w0_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let a = build(dir.path(), "a.json", "sn:3", "w0");
    let b = build(dir.path(), "b.json", "sn:3", "conj:s1.s2.s1");
    assert_eq!(std::fs::read(a).unwrap(), std::fs::read(b).unwrap());
}

#[test]
fn build_double_rejects_bad_specs() {
    for args in [
        ["build-double", "--group", "sn:1", "--auto", "w0"],
        ["build-double", "--group", "z:3", "--auto", "w0"],
        ["build-double", "--group", "sn:3", "--auto", "conj:s1.s2"],
        ["build-double", "--group", "sn:3", "--auto", "conj:t4"],
    ] {
        assert_eq!(forge(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn verify_hopf_round_trip_and_corruption() {
    let dir = tempfile::tempdir().unwrap();
    let p = build(dir.path(), "k3.json", "sn:3", "w0");
    let ok = forge(&["verify-hopf", p.to_str().unwrap()]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(!stdout(&ok).contains("FAIL"));

    // one comultiplication coefficient edited to 2
    let text = std::fs::read_to_string(&p).unwrap();
    let at = text.find("\"comult\":[[0,[[0,0,\"1\"]").expect("Δ(σ(e)) starts with σ(e)⊗σ(e)");
    let mut bad = text.clone();
    bad.replace_range(at..at + "\"comult\":[[0,[[0,0,\"1\"]".len(), "\"comult\":[[0,[[0,0,\"2\"]");
    let q = dir.path().join("bad.json");
    std::fs::write(&q, bad).unwrap();
    let o = forge(&["verify-hopf", q.to_str().unwrap(), "--json"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let failed: Vec<&str> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["pass"] == false)
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert!(failed.contains(&"counit_left"), "{failed:?}");

    let r = dir.path().join("zero_den.json");
    std::fs::write(&r, text.replacen("\"1\"", "\"1/0\"", 1)).unwrap();
    assert_eq!(forge(&["verify-hopf", r.to_str().unwrap()]).status.code(), Some(2));
    std::fs::write(&r, "not json").unwrap();
    assert_eq!(forge(&["verify-hopf", r.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn verify_qiso_counts_and_range() {
    let o = forge(&["verify-qiso", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let checks = stdout(&o).lines().filter(|l| l.starts_with("CHECK ")).count();
    assert!(checks >= 25, "{checks}");
    assert_eq!(forge(&["verify-qiso", "--n", "5"]).status.code(), Some(0));
    assert_eq!(forge(&["verify-qiso", "--n", "9"]).status.code(), Some(2));
    assert_eq!(forge(&["verify-qiso", "--n", "1"]).status.code(), Some(2));
}

#[test]
fn verify_qiso_json_is_deterministic() {
    let a = forge(&["verify-qiso", "--n", "4", "--json"]);
    let b = forge(&["verify-qiso", "--n", "4", "--json"]);
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["pass"] == true));
}

#[test]
fn s3_report_exports_verifiable_files() {
    let dir = tempfile::tempdir().unwrap();
    let o = forge(&["s3-report", "--export-dir", dir.path().to_str().unwrap()]);
    // K₁ and K₂ turn out to be isomorphic, so nothing can certify otherwise
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.lines().last().unwrap().starts_with("NOT CERTIFIED"));
    for k in ["k1.json", "k2.json"] {
        let p = dir.path().join(k);
        assert_eq!(forge(&["verify-hopf", p.to_str().unwrap()]).status.code(), Some(0), "{k}");
    }
    let j = forge(&["s3-report", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&j.stdout).unwrap();
    let names: Vec<&str> = v["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    for key in ["t_tables.T1", "kernel_T2.span", "path_v.distinct_grouplike_types", "non_isomorphism_certified"] {
        assert!(names.contains(&key), "{key}");
    }
}

#[test]
fn length_command() {
    let out = |args: &[&str]| stdout(&forge(args));
    assert_eq!(out(&["length", "--n", "3", "--gens", "coxeter", "--element", "s1.s2.s1"]), "3\n");
    assert_eq!(out(&["length", "--n", "3", "--gens", "s1,s1.s2,s2.s1", "--element", "s2"]), "2\n");
    assert_eq!(out(&["length", "--n", "5", "--element", "e"]), "0\n");
    assert_eq!(forge(&["length", "--n", "3", "--gens", "s2", "--element", "s1"]).status.code(), Some(2));
    assert_eq!(forge(&["length", "--n", "3", "--element", "s1.x"]).status.code(), Some(2));
}
