use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

use seidel_core::closedform::xi1;
use seidel_core::C3Params;

fn seidel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_seidel")).args(args).env_remove("SEIDEL_TOL").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn gen_counts_edges() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("c36.json");
    let o = seidel(&["gen", "complete-bipartite", "--k", "3", "--m", "3", "--n", "6", "--out", path(&file)]);
    assert!(o.status.success());
    assert!(stderr(&o).contains("edges: 63"));
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&file).unwrap()).unwrap();
    assert_eq!(doc["edges"].as_array().unwrap().len(), 63);

    let o = seidel(&["gen", "turan", "--n", "3", "--k", "3", "--r", "3"]);
    assert_eq!(stdout(&o), "{\"n\": 3, \"edges\": [[1, 2, 3]]}\n");
    let o = seidel(&["gen", "fixture", "--name", "hstar"]);
    assert!(stderr(&o).contains("edges: 6"));
    assert_eq!(seidel(&["gen", "fixture", "--name", "nope"]).status.code(), Some(2));
    assert_eq!(seidel(&["gen", "complete-bipartite", "--k", "1", "--m", "3", "--n", "3"]).status.code(), Some(2));
}

#[test]
fn fixture_written_by_gen_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    for name in seidel_core::fixtures::fixture_names() {
        let file = dir.path().join(format!("{name}.json"));
        assert!(seidel(&["gen", "fixture", "--name", name, "--out", path(&file)]).status.success());
        let text = std::fs::read_to_string(&file).unwrap();
        assert_eq!(text, seidel_core::fixtures::fixture_json(name).unwrap());
        let again = seidel(&["delete", path(&file), "--vertex", "1", "--mode", "isolate"]);
        assert!(again.status.success(), "{name}");
    }
}

#[test]
fn spectrum_of_edgeless_and_hstar() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("e.json");
    std::fs::write(&file, "{\"n\": 3, \"edges\": []}").unwrap();
    let o = seidel(&["spectrum", path(&file), "--json"]);
    let doc: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let vals: Vec<f64> = doc["eigenvalues"].as_array().unwrap().iter().map(|v| v.as_f64().unwrap()).collect();
    for (g, w) in vals.iter().zip([2.0, -1.0, -1.0]) {
        assert!((g - w).abs() < 1e-12);
    }
    assert_eq!(doc["inertia"], serde_json::json!([1, 0, 2]));

    let o = seidel(&["spectrum", "fixture:hstar", "--delete-vertex", "4", "--mode", "isolate", "--json"]);
    let doc: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let vals: Vec<f64> = doc["eigenvalues"].as_array().unwrap().iter().map(|v| v.as_f64().unwrap()).collect();
    for (g, w) in vals.iter().zip([5.594, 3.0, 0.574, -1.0, -1.0, -7.168]) {
        assert!((g - w).abs() < 5e-4, "{vals:?}");
    }
    let text = stdout(&seidel(&["spectrum", "fixture:hstar"]));
    assert!(text.contains("1.0000000  x3"));
    assert!(text.contains("inertia (+, 0, -): (4, 0, 2)"));
}

#[test]
fn energies() {
    let e = |args: &[&str]| stdout(&seidel(args)).trim().parse::<f64>().unwrap();
    assert_eq!(stdout(&seidel(&["energy", "fixture:single-edge"])), "8.0000000\n");
    assert!((e(&["energy", "fixture:hstar"]) - 16.886).abs() < 5e-3);
    assert!((e(&["energy", "fixture:hstar", "--delete-vertex", "4", "--mode", "isolate"]) - 18.336).abs() < 5e-3);
    assert!(e(&["energy", "fixture:hstar", "--delete-vertex", "4"]) > 16.886);
    assert!((e(&["energy", "fixture:h1-increase", "--delete-edge", "1,2,3"]) - 13.4164079).abs() < 1e-6);
}

#[test]
fn deletions_report_what_changed() {
    let o = seidel(&["delete", "fixture:c3-3-6", "--edge", "1,2,4", "--first-side", "1-3"]);
    assert!(stderr(&o).contains("type-II"));
    assert!(stderr(&o).contains("62 edges"));

    let o = seidel(&["delete", "fixture:hstar", "--vertex", "4", "--mode", "strong"]);
    assert!(stderr(&o).contains("5 vertices, 4 edges"));

    let o = seidel(&["delete", "fixture:hstar", "--vertex", "4", "--mode", "weak"]);
    let doc: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["n"], 5);
    let sizes: Vec<usize> = doc["edges"].as_array().unwrap().iter().map(|e| e.as_array().unwrap().len()).collect();
    assert_eq!(sizes.len(), 6);
    assert!(sizes.contains(&2) && sizes.contains(&3));

    assert_eq!(seidel(&["delete", "fixture:hstar", "--edge", "1,2,4"]).status.code(), Some(2));
    assert_eq!(seidel(&["delete", "fixture:hstar", "--vertex", "9"]).status.code(), Some(2));
}

#[test]
fn quotient_analysis() {
    let o = seidel(&["quotient", "fixture:c3-3-6", "--partition", "1-3|4-9"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("[-22 -78]\n[-39 -25]"));
    assert!(text.contains("roots contained in spectrum: yes"));

    let o = seidel(&["quotient", "fixture:c3-3-6-minus-type1", "--partition", "1|4|5|2-3|6-9"]);
    let want = -&xi1(C3Params::new(3, 6).unwrap()).unwrap();
    assert!(stdout(&o).contains(&format!("characteristic polynomial: {want}")));

    let o = seidel(&["quotient", "fixture:c3-3-6", "--partition", "1,4|2-3,5-9"]);
    assert_eq!(o.status.code(), Some(4));
    assert!(stdout(&o).contains("witness: block 1 -> block 2"));
    assert_eq!(seidel(&["quotient", "fixture:c3-3-6", "--partition", "1-3|4-8"]).status.code(), Some(2));
}

#[test]
fn verify_reports_and_exit_codes() {
    let o = seidel(&["verify", "--suite", "xi-exact", "--m-range", "2:5", "--n-range", "3:5"]);
    assert!(o.status.success());
    let rows: Vec<Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert!(!rows.is_empty());
    assert!(rows.iter().all(|r| r["status"] == "pass"));

    let o = seidel(&["verify", "--suite", "factorization-claim", "--format", "csv"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("check,cell,status,expected,actual,tol,note\n"));
    assert_eq!(text.lines().count(), 1 + 2 * 36);

    assert_eq!(seidel(&["verify", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(seidel(&["verify", "--suite", "deltaU", "--m-range", "5:2"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "--suite", "energy-decrease-E", "--jobs", "4"];
    assert_eq!(stdout(&seidel(&args)), stdout(&seidel(&args)));
    let args = ["sweep", "--m-range", "2:6", "--n-range", "2:6"];
    assert_eq!(stdout(&seidel(&args)), stdout(&seidel(&args)));
}

#[test]
fn timings_are_opt_in() {
    let o = seidel(&["verify", "--suite", "deltaU", "--m-range", "2:3", "--n-range", "2:3", "--timings"]);
    let first: Value = serde_json::from_str(stdout(&o).lines().next().unwrap()).unwrap();
    assert!(first["runtime_ms"].is_number());
}

#[test]
fn sweep_csv() {
    let o = seidel(&["sweep", "--quantity", "energy", "--family", "c3", "--m-range", "2:3", "--n-range", "2:3"]);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "m,n,L,U,closed_form_energy,brute_force_energy,difference");
    assert!(lines.next().unwrap().starts_with("2,2,6,144,18,"));
    assert_eq!(seidel(&["sweep", "--m-range", "1:3"]).status.code(), Some(2));
}

#[test]
fn tolerance_from_environment() {
    let run = |tol: &str| {
        Command::new(env!("CARGO_BIN_EXE_seidel"))
            .args(["energy", "fixture:hstar"])
            .env("SEIDEL_TOL", tol)
            .output()
            .unwrap()
    };
    assert!(run("1e-9").status.success());
    assert_eq!(run("abc").status.code(), Some(2));
    assert_eq!(run("-1").status.code(), Some(2));
}
