use std::process::Command;

use quadnef::report::ReportDocument;
use quadnef::schema::{catalog_from_json, catalog_to_json, to_canonical_json};

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn quadnef(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_quadnef")).args(args).output().expect("spawn quadnef");
    Run {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn stdout_of(args: &[&str]) -> String {
    let run = quadnef(args);
    assert_eq!(run.code, 0, "{args:?}: {}", run.stderr);
    run.stdout
}

#[test]
fn cohomology_lines() {
    assert_eq!(stdout_of(&["cohomology", "1", "1"]), "h0=4 h1=0 h2=0 chi=4\n");
    assert_eq!(stdout_of(&["cohomology", "-1", "-1"]), "h0=0 h1=0 h2=0 chi=0\n");
    assert_eq!(stdout_of(&["cohomology", "-3", "0"]), "h0=0 h1=2 h2=0 chi=-2\n");
    assert_eq!(stdout_of(&["cohomology", "-3", "-3"]), "h0=0 h1=0 h2=4 chi=4\n");
}

#[test]
fn malformed_arguments_are_usage_errors() {
    assert_eq!(quadnef(&["cohomology", "1"]).code, 2);
    assert_eq!(quadnef(&["cohomology", "x", "1"]).code, 2);
    assert_eq!(quadnef(&["ses", "--sub", "1,2", "--mid", "3,0,0,0"]).code, 2);
    assert_eq!(quadnef(&["frobnicate"]).code, 2);
}

#[test]
fn chi_values() {
    assert_eq!(stdout_of(&["chi", "3", "2", "2", "6", "0", "0"]), "5\n");
    assert_eq!(stdout_of(&["chi", "3", "2", "2", "6", "-1", "0"]), "0\n");
    assert_eq!(stdout_of(&["chi", "1", "0", "0", "0", "0", "0"]), "1\n");
}

#[test]
fn twist_and_ses() {
    assert_eq!(stdout_of(&["twist", "1", "0", "0", "0", "2", "-1"]), "rank=1 c1=(2,-1) c2=0\n");
    assert_eq!(stdout_of(&["ses", "--sub", "1,-2,-2,0", "--mid", "4,0,0,0"]), "rank=3 c1=(2,2) c2=8\n");
    // Rank of the sub exceeding the middle term's rank.
    assert_eq!(quadnef(&["ses", "--sub", "3,0,0,0", "--mid", "2,0,0,0"]).code, 2);
}

#[test]
fn bondal_pages() {
    let six = stdout_of(&["bondal", "6", "4"]);
    assert!(six.contains("E2^{0,0} = O^6"), "{six}");
    assert!(six.contains("E2^{-2,1} = O(-1,-1)^2"), "{six}");
    assert!(six.contains("four-term identity: PASS"));
    assert!(six.contains("reconstruction") && six.trim_end().ends_with("PASS"));

    let seven = stdout_of(&["bondal", "7", "3"]);
    assert!(seven.contains("E2^{-1,1} = k(p)"), "{seven}");

    let eight = stdout_of(&["bondal", "8", "3"]);
    assert_eq!(eight.matches("four-term identity: PASS").count(), 2);
    let curve = stdout_of(&["bondal", "8", "3", "--variant", "curve"]);
    assert_eq!(curve.matches("four-term identity: PASS").count(), 1);
    assert!(curve.contains("O_E(d)"));
}

#[test]
fn bondal_below_six_is_refused() {
    let run = quadnef(&["bondal", "5", "3"]);
    assert_eq!(run.code, 2);
    assert!(run.stderr.contains("c2 >= 6"), "{}", run.stderr);
    assert!(run.stdout.is_empty());
    assert_eq!(quadnef(&["bondal", "7", "3", "--variant", "structure"]).code, 2);
}

#[test]
fn verify_main22_json() {
    let run = quadnef(&["verify", "main22", "--rank-min", "2", "--rank-max", "8", "--format", "json"]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    let doc: ReportDocument = serde_json::from_str(&run.stdout).unwrap();
    assert!(doc.is_consistent());
    assert_eq!(doc.summary.failed, 0);
    let families: std::collections::BTreeSet<_> = doc.results.iter().map(|r| r.case_id.as_str()).collect();
    assert_eq!(families.len(), 23);
    assert!(doc.results.iter().all(|r| (2..=8).contains(&r.rank_tested)));
    let ten = doc.results.iter().find(|r| r.case_id == "main22-10").unwrap();
    assert_eq!(ten.weak_fano, Some(false));
    assert_eq!(ten.computed.unwrap().c2, 8);
}

#[test]
fn report_json_is_canonical() {
    let out = stdout_of(&["verify", "quadric21", "--format", "json"]);
    let doc: ReportDocument = serde_json::from_str(&out).unwrap();
    assert_eq!(to_canonical_json(&doc).unwrap() + "\n", out);
}

#[test]
fn verify_quadric21_text() {
    let out = stdout_of(&["verify", "quadric21"]);
    for (id, c2) in [("quadric21-1", 0), ("quadric21-5", 4)] {
        assert!(out.contains(&format!("PASS  {id}  r=3  c2={c2}")), "{out}");
    }
    assert!(out.contains("    ok   c1: "));
    assert!(out.trim_end().ends_with("0 failed"));
}

#[test]
fn verify_usage_errors() {
    assert_eq!(quadnef(&["verify", "bogus"]).code, 2);
    assert_eq!(quadnef(&["verify"]).code, 2);
    assert_eq!(quadnef(&["verify", "halfmax", "--c1", "3,2"]).code, 2);
    assert_eq!(quadnef(&["verify", "nearmax", "--c1", "0,2"]).code, 2);
    assert_eq!(quadnef(&["verify", "halfmax", "--c1", "3,2", "--b-param", "3"]).code, 2);
}

#[test]
fn verify_parametric_lists() {
    assert_eq!(quadnef(&["verify", "halfmax", "--c1", "3,2", "--b-param", "0"]).code, 0);
    assert_eq!(quadnef(&["verify", "halfmax", "--c1", "3,2", "--b-param", "2"]).code, 0);
    assert_eq!(quadnef(&["verify", "nearmax", "--c1", "2,3", "--rank-min", "2"]).code, 0);
    let all = stdout_of(&["verify", "all", "--c1", "2,2", "--b-param", "1", "--format", "json"]);
    let doc: ReportDocument = serde_json::from_str(&all).unwrap();
    for key in ["main22-", "quadric21-", "nearmax-", "halfmax-"] {
        assert!(doc.results.iter().any(|r| r.case_id.starts_with(key)), "{key}");
    }
}

#[test]
fn empty_rank_range() {
    let out = stdout_of(&["verify", "main22", "--rank-min", "5", "--rank-max", "4", "--format", "json"]);
    let doc: ReportDocument = serde_json::from_str(&out).unwrap();
    assert!(doc.results.is_empty());
    assert_eq!(doc.summary.total, 0);
}

#[test]
fn catalog_list_round_trips() {
    let out = stdout_of(&["catalog", "list", "all", "--format", "json"]);
    let cases = catalog_from_json(&out).unwrap();
    assert_eq!(cases.len(), 28);
    assert_eq!(catalog_to_json(&cases).unwrap() + "\n", out);
    let text = stdout_of(&["catalog", "list", "main22"]);
    assert!(text.contains("main22-13  c2=8"));
    assert!(text.contains("twin of main22-6-3, inferred by symmetry"));
}

#[test]
fn verify_external_catalog() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("good.json");
    std::fs::write(&good, stdout_of(&["catalog", "list", "main22", "--format", "json"])).unwrap();
    let run = quadnef(&["verify", "--catalog", good.to_str().unwrap(), "--rank-max", "6"]);
    assert_eq!(run.code, 0, "{}", run.stderr);

    // Corrupt the expected c2 of one family: the run completes and reports a failure.
    let mut records: Vec<serde_json::Value> = serde_json::from_str(&std::fs::read_to_string(&good).unwrap()).unwrap();
    records[0]["expected_c2"] = serde_json::json!(1);
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, serde_json::to_string(&records).unwrap()).unwrap();
    let run = quadnef(&["verify", "--catalog", bad.to_str().unwrap(), "--rank-max", "6"]);
    assert_eq!(run.code, 1);
    assert!(run.stdout.contains("FAIL  main22-1"));
    assert!(run.stdout.contains("FAIL c2_expected"));

    let run = quadnef(&["verify", "--catalog", dir.path().join("missing.json").to_str().unwrap()]);
    assert_eq!(run.code, 2);
    std::fs::write(&bad, "{\"not\": \"a list\"}").unwrap();
    assert_eq!(quadnef(&["verify", "--catalog", bad.to_str().unwrap()]).code, 2);
    assert_eq!(quadnef(&["verify", "main22", "--catalog", good.to_str().unwrap()]).code, 2);
}
