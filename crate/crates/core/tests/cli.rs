use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use ricci_net::io::write_edge_list;
use ricci_net::reproduce::zachary_karate_club;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ricci-net")).args(args).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn csv_rows(path: &Path) -> Vec<String> {
    fs::read_to_string(path).unwrap().lines().map(str::to_string).collect()
}

#[test]
fn generate_writes_edges_and_sidecar() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let o = run(&["generate", "family=er", "n=200", "p=0.05", "--seed", "7", "--out", out]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let edges = dir.path().join("er_n200_s7.txt");
    assert!(edges.is_file());
    let sidecar: serde_json::Value = serde_json::from_str(&fs::read_to_string(dir.path().join("er_n200_s7.json")).unwrap()).unwrap();
    assert_eq!(sidecar["seed"], 7);
    assert_eq!(sidecar["spec"]["family"], "er");
    assert_eq!(sidecar["details"]["edges"].as_u64().unwrap() as usize, csv_rows(&edges).len() - 1);

    // same seed, same bytes
    let again = tempfile::tempdir().unwrap();
    run(&["generate", "--family", "er", "--n", "200", "--p", "0.05", "--seed", "7", "--out", again.path().to_str().unwrap()]);
    assert_eq!(fs::read(&edges).unwrap(), fs::read(again.path().join("er_n200_s7.txt")).unwrap());
}

#[test]
fn compute_on_zachary() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("karate.txt");
    write_edge_list(&zachary_karate_club(), &input).unwrap();
    let out = dir.path().join("out");
    let o = run(&["compute", "--input", input.to_str().unwrap(), "--out", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let edges = csv_rows(&out.join("karate_edges.csv"));
    let vertices = csv_rows(&out.join("karate_vertices.csv"));
    assert_eq!(edges.len(), 79);
    assert_eq!(vertices.len(), 35);
    assert_eq!(edges[0], "u,v,OR,FR,AFR,EBC,EMB,DIS");
    assert!(vertices[0].starts_with("vertex,OR,FR,AFR"));
    assert!(out.join("karate_run.json").is_file());

    let single = dir.path().join("single");
    let o = run(&["compute", "--input", input.to_str().unwrap(), "--metrics", "fr", "--out", single.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert_eq!(csv_rows(&single.join("karate_edges.csv"))[0], "u,v,FR");
}

#[test]
fn disconnected_input_uses_largest_component() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("two.txt");
    fs::write(&input, "1 2\n2 3\n3 1\n3 4\n10 11\n").unwrap();
    let o = run(&["compute", "--input", input.to_str().unwrap(), "--metrics", "fr", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(String::from_utf8_lossy(&o.stderr).contains("largest"));
    assert_eq!(csv_rows(&dir.path().join("two_edges.csv")).len(), 5);
}

#[test]
fn correlate_and_robustness_write_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let o = run(&["correlate", "--family", "er", "--n", "200", "--p", "0.02", "--samples", "2", "--out", out]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let rows = csv_rows(&dir.path().join("er_n200_s0_correlations.csv"));
    assert!(rows[0].starts_with("network,scope,a,b,pearson,spearman"));
    assert!(rows.len() > 1);

    let o = run(&[
        "robustness", "--family", "ba", "--n", "100", "--m", "2", "--strategies", "random,ebc_decreasing",
        "--samples", "2", "--steps", "5", "--out", out,
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let rows = csv_rows(&dir.path().join("ba_n100_s0_edges_removal.csv"));
    assert_eq!(rows[0], "strategy,fraction,efficiency");
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    assert_eq!(code(&run(&["generate", "family=ws", "n=100", "k=3", "beta=0.1", "--out", out])), 1);
    assert_eq!(code(&run(&["generate", "family=hgg", "n=100", "k=5", "gamma=2", "temperature=1", "--out", out])), 1);
    assert_eq!(code(&run(&["compute", "--input", "/nonexistent/graph.txt", "--out", out])), 2);
    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "1 2\nfoo bar\n").unwrap();
    assert_eq!(code(&run(&["compute", "--input", bad.to_str().unwrap(), "--out", out])), 2);
    assert_eq!(code(&run(&["robustness", "--family", "er", "--n", "50", "--p", "0.1", "--strategies", "nope", "--out", out])), 1);
    assert_eq!(code(&run(&["no-such-command"])), 1);
    assert_eq!(code(&run(&["--help"])), 0);
}
