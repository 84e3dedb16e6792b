//! Drives the `dchain` binary end to end.

use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn dchain(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_dchain"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn dchain");
    let mut pipe = child.stdin.take().unwrap();
    if let Some(s) = stdin {
        pipe.write_all(s.as_bytes()).unwrap();
    }
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn ok_json(args: &[&str], stdin: Option<&str>) -> Value {
    let out = dchain(args, stdin);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn gen(args: &[&str]) -> String {
    let out = dchain(&[&["gen"], args].concat(), None);
    assert!(out.status.success());
    stdout(&out)
}

fn tmp(name: &str, content: &str) -> String {
    let dir = std::env::temp_dir().join(format!("dchain-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, content).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn gen_periodic_pattern() {
    let v: Value = serde_json::from_str(&gen(&["--n1", "16", "--n2", "1", "--coloring", "periodic16"])).unwrap();
    assert_eq!(v["coloring"]["c1"], "BBWWWWBBBBBBWWWW");
}

#[test]
fn gen_random_is_stable() {
    let args = ["--n1", "3", "--n2", "3", "--coloring", "random-equitable", "--seed", "7"];
    let a = gen(&args);
    assert_eq!(a, gen(&args));
    let v: Value = serde_json::from_str(&a).unwrap();
    let s = format!("{}{}", v["coloring"]["c1"].as_str().unwrap(), v["coloring"]["c2"].as_str().unwrap());
    assert_eq!(s.matches('B').count(), 3);
}

#[test]
fn gen_explicit_echoes() {
    let v: Value = serde_json::from_str(&gen(&["--n1", "2", "--n2", "2", "--coloring", "explicit", "--c1", "BW", "--c2", "WB"])).unwrap();
    assert_eq!(v["coloring"]["c1"], "BW");
    assert_eq!(v["coloring"]["c2"], "WB");
}

#[test]
fn embed_path_certifies_and_pipes() {
    let inst = gen(&["--n1", "5", "--n2", "5", "--seed", "1"]);
    let path = ok_json(&["embed-path", "--certify"], Some(&inst));
    assert_eq!(path["order"].as_array().unwrap().len(), 10);
    let inst_file = tmp("inst.json", &inst);
    let path_file = tmp("path.json", &path.to_string());
    let verdict = ok_json(&["verify", "--instance", &inst_file, "--path", &path_file], None);
    assert_eq!(verdict["valid"], true);
}

#[test]
fn embed_path_rejects_non_equitable() {
    let inst = gen(&["--n1", "2", "--n2", "2", "--coloring", "explicit", "--c1", "BB", "--c2", "BW"]);
    let out = dchain(&["embed-path"], Some(&inst));
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not equitable"));
}

#[test]
fn verify_reports_a_crossing() {
    let inst = gen(&["--n1", "2", "--n2", "2", "--coloring", "explicit", "--c1", "BW", "--c2", "BW"]);
    let inst_file = tmp("cross.json", &inst);
    // c1[0] -> c2[1] -> c1[1] -> c2[0]: the two inter-chain edges
    // c1[0]c2[1] and c1[1]c2[0] cross.
    let path = tmp("crossing-path.json", r#"{"order":[["c1",0],["c2",1],["c1",1],["c2",0]]}"#);
    let out = dchain(&["verify", "--instance", &inst_file, "--path", &path], None);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["valid"], false);
}

#[test]
fn caterpillar_precondition_on_long_spine() {
    // Path on six vertices: central path of 4 > 3.
    let graph = r#"{"n":6,"edges":[[0,1],[1,2],[2,3],[3,4],[4,5]],"colors":"BWBWBW"}"#;
    let inst = tmp("six.json", &gen(&["--n1", "3", "--n2", "3"]));
    let out = dchain(&["embed-caterpillar", "--instance", &inst, "--graph", "-"], Some(graph));
    assert_eq!(out.status.code(), Some(1), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(String::from_utf8_lossy(&out.stderr).contains("central path"));
}

#[test]
fn caterpillar_and_stars_embed() {
    let inst = tmp("six-b.json", &gen(&["--n1", "3", "--n2", "3", "--seed", "4"]));
    // Central path 0-1, two leaves on each.
    let cat = r#"{"n":6,"edges":[[0,1],[1,2],[1,3],[0,4],[0,5]],"colors":"BWBBWW"}"#;
    let v = ok_json(&["embed-caterpillar", "--instance", &inst, "--graph", "-", "--certify"], Some(cat));
    assert_eq!(v["map"].as_array().unwrap().len(), 6);
    let stars = r#"{"n":6,"edges":[[0,1],[0,2],[3,4]],"colors":"BWWBWB"}"#;
    let v = ok_json(&["embed-stars", "--instance", &inst, "--graph", "-", "--certify"], Some(stars));
    assert_eq!(v["map"].as_array().unwrap().len(), 6);
}

#[test]
fn oracle_statuses_and_exit_codes() {
    let found = ok_json(&["oracle"], Some(&gen(&["--n1", "3", "--n2", "3"])));
    assert_eq!(found["status"], "found");
    assert_eq!(found["witness"].as_array().unwrap().len(), 6);

    let c4 = r#"{"n":4,"edges":[[0,1],[1,2],[2,3],[3,0]],"colors":"BWBW"}"#;
    let inst = tmp("mono.json", &gen(&["--n1", "2", "--n2", "2", "--coloring", "monochromatic-chains"]));
    let none = ok_json(&["oracle", "--instance", &inst, "--graph", "-"], Some(c4));
    assert_eq!(none["status"], "none");

    let out = dchain(&["oracle", "--nodes", "5"], Some(&gen(&["--n1", "16", "--n2", "1", "--coloring", "periodic16"])));
    assert_eq!(out.status.code(), Some(3));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["status"], "inconclusive");
}

#[test]
fn render_counts_and_determinism() {
    let inst = gen(&["--n1", "2", "--n2", "2"]);
    let inst_file = tmp("r.json", &inst);
    let path = ok_json(&["embed-path", "--instance", &inst_file], None);
    let path_file = tmp("r-path.json", &path.to_string());
    let a = stdout(&dchain(&["render", "--instance", &inst_file, "--path", &path_file], None));
    let b = stdout(&dchain(&["render", "--instance", &inst_file, "--path", &path_file], None));
    assert_eq!(a, b);
    assert_eq!(a.matches("<circle").count(), 4);
    assert_eq!(a.matches("<line").count(), 3);
}

#[test]
fn sweep_passes_and_fault_is_caught() {
    let v = ok_json(&["sweep", "--suite", "nhap", "--max-n", "6"], None);
    assert_eq!(v["mismatches"], 0);
    let out = dchain(&["sweep", "--suite", "nhap", "--max-n", "6", "--inject-fault"], None);
    assert_eq!(out.status.code(), Some(2));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v["mismatches"].as_u64().unwrap() > 0);
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("dchain-out-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("inst.json");
    let out = dchain(&["gen", "--n1", "2", "--n2", "3", "--out", file.to_str().unwrap()], None);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(file).unwrap()).unwrap();
    assert_eq!(v["double_chain"]["c2"].as_array().unwrap().len(), 3);
}

#[test]
fn bench_reports_rows() {
    let v = ok_json(&["bench", "--sizes", "1000,2000", "--fracs", "0.5", "--reps", "1"], None);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 2);
    assert!(rows[1]["ratio"].is_number());
}
