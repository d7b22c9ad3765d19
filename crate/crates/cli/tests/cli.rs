use std::process::{Command, Output};

use serde_json::Value;

fn pedigree(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pedigree"))
        .args(args)
        .env("PEDIGREE_THREADS", "2")
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn adjacent_pair_exits_zero() {
    let out = pedigree(&["adjacency", "--tour-a", "1 2 3 4 5", "--tour-b", "1 3 2 4 5"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["adjacent"], true);
    assert_eq!(v["n"], 5);
}

#[test]
fn non_adjacent_pair_exits_one() {
    let out = pedigree(&["adjacency", "--tour-a", "1 2 3 4 5 6", "--tour-b", "1 4 2 6 3 5", "--dump-graph"]);
    assert_eq!(out.status.code(), Some(1));
    let v = stdout_json(&out);
    assert_eq!(v["adjacent"], false);
    assert!(v["components"].as_u64().unwrap() >= 2);
    assert!(v.get("graph").is_some());
}

#[test]
fn decode_small_tour() {
    let out = pedigree(&["decode", "--tour", "1 4 2 3"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), r#"{"4":[1,2]}"#);
}

#[test]
fn decode_then_replay_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let hist = dir.path().join("h.json");
    let tour = "1 4 5 2 7 3 6";
    let out = pedigree(&["decode", "--tour", tour, "--out", hist.to_str().unwrap()]);
    assert!(out.status.success());
    let out = pedigree(&["replay", "--history", &format!("@{}", hist.display())]);
    assert!(out.status.success());
    let labels: Vec<String> = stdout_json(&out)
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.to_string())
        .collect();
    assert_eq!(labels.join(" "), tour);
}

#[test]
fn replay_accepts_line_form() {
    let out = pedigree(&["replay", "--history", "4: 1 2\n5: 2 3"]);
    assert!(out.status.success());
    assert_eq!(stdout_json(&out), serde_json::json!([1, 4, 2, 5, 3]));
}

#[test]
fn isolation_probability_is_exact() {
    let out = pedigree(&["validate", "--suite", "lemma10", "--n", "6", "--seed", "9"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["expected"], "1/5");
    assert_eq!(v["observed"], "1/5");
    assert_eq!(v["pass"], true);
    assert_eq!(v["seed"], 9);
}

#[test]
fn same_seed_same_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let run = |tag: &str| {
        let csv = dir.path().join(format!("{tag}.csv"));
        let out = pedigree(&[
            "simulate", "--strategy", "random", "--n", "40", "--trials", "5", "--seed", "17", "--emit",
            csv.to_str().unwrap(),
        ]);
        assert!(out.status.success());
        (out.stdout, std::fs::read(csv).unwrap())
    };
    let (a, b) = (run("a"), run("b"));
    assert_eq!(a, b);
    let csv = String::from_utf8(a.1).unwrap();
    assert_eq!(csv.lines().next().unwrap(), "trial,n,move_class,dS,dT,S,T,isolated");
    assert_eq!(csv.lines().count(), 1 + 5 * 37);
}

#[test]
fn missing_seed_is_reported() {
    let out = pedigree(&["simulate", "--strategy", "greedy-common", "--n", "8"]);
    assert!(out.status.success());
    let stderr = String::from_utf8(out.stderr.clone()).unwrap();
    let printed: u64 = stderr.trim().strip_prefix("seed: ").unwrap().parse().unwrap();
    assert_eq!(stdout_json(&out)["seed"], printed);
}

#[test]
fn scripted_strategy_reads_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("alice.txt");
    std::fs::write(&path, "4: 1 2\n5: 1 4\n6: 2 3\n").unwrap();
    let arg = format!("scripted:{}", path.display());
    let out = pedigree(&["simulate", "--strategy", &arg, "--n", "6", "--seed", "1"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn skeleton_census_small() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("deg.csv");
    let out = pedigree(&["skeleton", "--n", "5", "--csv", csv.to_str().unwrap()]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["vertex_count"], 12);
    assert_eq!(v["edge_count"], 60);
    assert_eq!(std::fs::read_to_string(csv).unwrap().lines().count(), 13);
}

#[test]
fn malformed_input_exits_two() {
    let out = pedigree(&["decode", "--tour", "1 4 x 3"]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("line 1, column 5"), "{stderr}");

    let out = pedigree(&["adjacency", "--tour-a", "1 2 3", "--tour-b", "1 2 3 4"]);
    assert_eq!(out.status.code(), Some(2));
    let out = pedigree(&["simulate", "--strategy", "bogus", "--n", "5"]);
    assert_eq!(out.status.code(), Some(2));
}
