use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn leflab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_leflab"))
        .args(args)
        .env_remove("LEFLAB_SEED")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "{e}: {}\n{}",
            String::from_utf8_lossy(&out.stdout),
            String::from_utf8_lossy(&out.stderr)
        )
    })
}

fn strip_timings(mut v: Value) -> Value {
    match &mut v {
        Value::Object(m) => {
            m.remove("timings");
        }
        Value::Array(a) => {
            for x in a.iter_mut() {
                if let Value::Object(m) = x {
                    m.remove("timings");
                }
            }
        }
        _ => {}
    }
    v
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn locus_of_general_quadrics_is_twenty_points() {
    let out = leflab(&["locus", "--ci", "2,2,2,2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["version"], 1);
    assert_eq!(v["total"]["projective_dimension"], 0);
    assert_eq!(v["total"]["degree"], 20);
    assert_eq!(v["hvector"], serde_json::json!([1, 4, 6, 4, 1]));
}

#[test]
fn jordan_all_supports_of_quadrics() {
    let out = leflab(&["jordan", "--monomial", "2,2,2,2", "--all-supports"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let parts: Vec<Value> = v["jordan"].as_array().unwrap().iter().map(|j| j["partition"].clone()).collect();
    assert_eq!(
        parts,
        vec![
            serde_json::json!([5, 3, 3, 3, 1, 1]),
            serde_json::json!([4, 4, 2, 2, 2, 2]),
            serde_json::json!([3, 3, 3, 3, 1, 1, 1, 1]),
            serde_json::json!([2, 2, 2, 2, 2, 2, 2, 2]),
        ]
    );
}

#[test]
fn verify_sweep_three_variables_has_no_mismatches() {
    let out = leflab(&["verify", "--sweep", "n=3", "--max-degree", "5"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let v = json(&out);
    let records = v.as_array().unwrap();
    assert_eq!(records.len(), 20);
    assert!(records.iter().all(|r| r["mismatches"].as_array().unwrap().is_empty()));
}

#[test]
fn seeded_runs_are_identical_modulo_timings() {
    let a = json(&leflab(&["verify", "--ci", "2,3,3", "--seed", "11"]));
    let b = json(&leflab(&["verify", "--ci", "2,3,3", "--seed", "11"]));
    assert_eq!(strip_timings(a), strip_timings(b));
}

#[test]
fn seed_comes_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_leflab"))
        .args(["hf", "--ci", "2,2"])
        .env("LEFLAB_SEED", "42")
        .output()
        .unwrap();
    assert_eq!(json(&out)["seed"], 42);
}

#[test]
fn ideal_file_input() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "cubes.txt", "n=3\nfield=fp:32003\ngens: x1^3, x2^3, x3^3\n");
    let out = leflab(&["hf", "--ideal", &p]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["hvector"], serde_json::json!([1, 3, 6, 7, 6, 3, 1]));
    let bad = write(dir.path(), "bad.txt", "n=3\ngens: x1^^2\n");
    let out = leflab(&["hf", "--ideal", &bad]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    let inhom = write(dir.path(), "inhom.txt", "n=2\ngens: x1+x2^2\n");
    let out = leflab(&["hf", "--ideal", &inhom]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not homogeneous"));
}

#[test]
fn point_file_input() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "pts.txt", "e=6\n1 0 0\n0 1 0\n1 1 0\n1 2 0\n0 0 1\n");
    let out = leflab(&["verify", "--points", &p]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let v = json(&out);
    assert_eq!(v["hvector"], serde_json::json!([1, 3, 4, 5, 4, 3, 1]));
    assert_eq!(v["total"]["codim"], 1);
}

#[test]
fn predict_only_uses_closed_forms() {
    let v = json(&leflab(&["predict", "--ci", "2,2,3"]));
    assert_eq!(v["predictions"][0]["codim"], 2);
    assert_eq!(v["predictions"][0]["degree"], 6);
    let v = json(&leflab(&["predict", "--hvector", "1,3,6,7,6,3,1"]));
    assert_eq!(v["predictions"][0]["degree"], 21);
    let v = json(&leflab(&["predict", "--monomial", "4,4,4"]));
    assert_eq!(v["details"]["defining_monomial"], "a1^4*a2^4*a3^4");
}

#[test]
fn csv_flattens_degree_reports() {
    let out = leflab(&["locus", "--monomial", "2,2,3", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with("command,input,field,seed"));
    assert!(lines.next().unwrap().starts_with("locus,\"monomial:2,2,3\""));
}

#[test]
fn census_resume_writes_no_duplicates() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("census.jsonl");
    let p = path.to_str().unwrap();
    let out = leflab(&["census", "--n", "3", "--max-degree", "4", "--out", p, "--jobs", "2"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let full = std::fs::read_to_string(&path).unwrap();
    assert_eq!(full.lines().count(), 10);
    // Simulate an interruption: keep four records and a torn line.
    let kept: Vec<&str> = full.lines().take(4).collect();
    std::fs::write(&path, format!("{}\n{{\"version\":1,\"n\"", kept.join("\n"))).unwrap();
    let out = leflab(&["census", "--n", "3", "--max-degree", "4", "--out", p]);
    assert_eq!(out.status.code(), Some(0));
    let summary: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!((summary["written"].as_u64(), summary["skipped"].as_u64()), (Some(6), Some(4)));
    let records: Vec<Value> = std::fs::read_to_string(&path)
        .unwrap()
        .lines()
        .filter_map(|l| serde_json::from_str(l).ok())
        .collect();
    let mut tuples: Vec<Value> = records.iter().map(|r| r["degrees"].clone()).collect();
    assert_eq!(tuples.len(), 10);
    tuples.sort_by_key(|t| t.to_string());
    tuples.dedup();
    assert_eq!(tuples.len(), 10);
    assert!(records.iter().all(|r| r["matches"] == true));
}

#[test]
fn census_respects_degree_cap() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("c.jsonl");
    let out = leflab(&["census", "--n", "3", "--max-degree", "9", "--out", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn paper_suite_single_check() {
    let out = leflab(&["paper", "--only", "monomial-443"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("monomial-444"));
    assert!(text.contains("1/1 checks passed"));
}

#[test]
fn paper_suite_unknown_check_is_an_error() {
    assert_eq!(leflab(&["paper", "--only", "nope"]).status.code(), Some(1));
}

#[test]
fn invalid_field_is_rejected() {
    let out = leflab(&["hf", "--ci", "2,2", "--field", "fp:100"]);
    assert_ne!(out.status.code(), Some(0));
}

#[test]
fn small_prime_suite_reports_statuses() {
    let out = leflab(&["paper", "--only", "ci-2222-points", "--field", "fp:101", "--out", "/dev/null"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(
        ["[PASS]", "[FAIL]", "[GENERICITY]"].iter().any(|s| text.contains(s)),
        "{text}"
    );
}
