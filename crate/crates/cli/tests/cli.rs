use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_flagsphere"))
        .args(args)
        .output()
        .unwrap()
}

fn run_env(args: &[&str], key: &str, val: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_flagsphere"))
        .args(args)
        .env(key, val)
        .output()
        .unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout)
        .unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&o.stdout)))
}

fn tmp(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("flagsphere-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn gen(args: &[&str], name: &str) -> PathBuf {
    let o = run(args);
    assert!(o.status.success());
    tmp(name, std::str::from_utf8(&o.stdout).unwrap())
}

#[test]
fn gen_gm_3() {
    let o = run(&["gen", "gm", "--m", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.starts_with("graph 8\n"));
    assert_eq!(text.lines().filter(|l| l.starts_with("e ")).count(), 10);
}

#[test]
fn gen_json_and_ind() {
    let j: Value =
        serde_json::from_slice(&run(&["gen", "gm", "--m", "2", "--json"]).stdout).unwrap();
    assert_eq!(j["edges"].as_array().unwrap().len(), 5);
    let text = String::from_utf8(run(&["gen", "gm", "--m", "2", "--ind"]).stdout).unwrap();
    assert!(text.starts_with("complex 5\n"));
    assert_eq!(text.lines().filter(|l| l.starts_with("f ")).count(), 5);
    let cross = String::from_utf8(run(&["gen", "cross", "--m", "3"]).stdout).unwrap();
    assert_eq!(cross.lines().filter(|l| l.starts_with("f ")).count(), 8);
}

#[test]
fn check_verdicts_and_exit_codes() {
    let g3 = gen(&["gen", "gm", "--m", "3"], "g3.txt");
    let o = run(&[
        "check",
        "--file",
        g3.to_str().unwrap(),
        "--ternary",
        "--gorenstein",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let r = json(&o);
    assert_eq!(r["schema_version"], 1);
    assert_eq!(r["result"]["checks"]["ternary"]["holds"], true);
    assert_eq!(r["result"]["checks"]["gorenstein"]["holds"], true);
    assert_eq!(r["inputs"][0]["sha256"].as_str().unwrap().len(), 64);

    let r3 = gen(&["gen", "r3"], "r3.txt");
    let o = run(&["check", "--file", r3.to_str().unwrap(), "--ternary"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(
        json(&o)["result"]["checks"]["ternary"]["witness"]["induced_cycle"]
            .as_array()
            .unwrap()
            .len(),
        3
    );
}

#[test]
fn nonplanar_witness_is_serialized() {
    let k33 = tmp(
        "k33.txt",
        "graph 6\ne 0 3\ne 0 4\ne 0 5\ne 1 3\ne 1 4\ne 1 5\ne 2 3\ne 2 4\ne 2 5\n",
    );
    let o = run(&["check", "--file", k33.to_str().unwrap(), "--planar"]);
    assert_eq!(o.status.code(), Some(1));
    let w = &json(&o)["result"]["checks"]["planar"]["witness"]["kuratowski"];
    assert_eq!(w["kind"], "K33");
    assert_eq!(w["paths"].as_array().unwrap().len(), 9);
}

#[test]
fn complex_input_rejects_graph_checks() {
    let c = gen(&["gen", "cross", "--m", "2"], "cross2.txt");
    let o = run(&[
        "check",
        "--file",
        c.to_str().unwrap(),
        "--homology-sphere",
        "--coeff",
        "Q",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        json(&o)["result"]["checks"]["homology_sphere"]["holds"],
        true
    );
    assert_eq!(
        run(&["check", "--file", c.to_str().unwrap(), "--ternary"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn vectors_gm5_delannoy() {
    let o = run(&["vectors", "--gm", "5", "--delannoy"]);
    assert_eq!(o.status.code(), Some(0));
    let r = json(&o);
    let h: Vec<&str> = r["result"]["h"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap())
        .collect();
    assert_eq!(h, ["1", "9", "25", "25", "9", "1"]);
    assert_eq!(r["result"]["delannoy"]["match"], true);
    assert_eq!(r["result"]["real_rooted"]["certified"], true);
    assert_eq!(
        r["result"]["real_rooted"]["isolating_intervals"]
            .as_array()
            .unwrap()
            .len(),
        5
    );
}

#[test]
fn vectors_needs_exactly_one_source() {
    assert_eq!(run(&["vectors"]).status.code(), Some(2));
    assert_eq!(
        run(&["vectors", "--gm", "2", "--file", "x"]).status.code(),
        Some(2)
    );
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(
        run(&["check", "--file", "x", "--bogus"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        run(&["check", "--file", "/nonexistent/g.txt"])
            .status
            .code(),
        Some(2)
    );
    let bad = tmp("neg.txt", "graph 2\ne 0 -1\n");
    let o = run(&["check", "--file", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
}

#[test]
fn face_guard_exits_3() {
    let g = gen(&["gen", "gm", "--m", "4"], "g4.txt");
    let o = run_env(
        &["check", "--file", g.to_str().unwrap(), "--gorenstein"],
        "FLAGSPHERE_FACE_GUARD",
        "10",
    );
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn output_is_deterministic_across_job_counts() {
    let g = gen(&["gen", "union", "--ms", "2,3"], "u23.txt");
    let f = g.to_str().unwrap();
    let base = run(&["check", "--file", f]).stdout;
    for jobs in ["1", "4"] {
        let again = run(&["--jobs", jobs, "check", "--file", f]).stdout;
        let j1: Value = serde_json::from_slice(&base).unwrap();
        let j2: Value = serde_json::from_slice(&again).unwrap();
        assert_eq!(j1["result"], j2["result"]);
    }
    assert_eq!(run(&["check", "--file", f]).stdout, base);
    let a = run(&[
        "--jobs",
        "3",
        "construct",
        "--corpus",
        "--seed",
        "7",
        "--runs",
        "20",
    ])
    .stdout;
    let b = run(&[
        "construct",
        "--corpus",
        "--seed",
        "7",
        "--runs",
        "20",
        "--jobs",
        "1",
    ])
    .stdout;
    let (a, b): (Value, Value) = (
        serde_json::from_slice(&a).unwrap(),
        serde_json::from_slice(&b).unwrap(),
    );
    assert_eq!(a["result"], b["result"]);
}

#[test]
fn timing_is_opt_in() {
    assert!(json(&run(&["vectors", "--gm", "2"]))
        .get("timing_ms")
        .is_none());
    assert!(json(&run(&["vectors", "--gm", "2", "--timing"]))["timing_ms"].is_number());
}

#[test]
fn flip_emits_dot_and_json() {
    let o = run(&["flip", "--n", "4", "--emit", "dot"]);
    assert_eq!(o.status.code(), Some(0));
    let dot = String::from_utf8(o.stdout).unwrap();
    assert_eq!(dot.matches(" -- ").count(), 5);
    let r = json(&run(&["flip", "--n", "5", "--exhaustive"]));
    assert_eq!(r["passed"], true);
    assert_eq!(r["result"]["vertices"], 7);
}

#[test]
fn construct_script_worked_example() {
    let s = tmp(
        "example.fs",
        "# three pentagons\nexample\nstep 1 6 21\nstep 7 11 22\nclassify\n",
    );
    let o = run(&["construct", "--script", s.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let r = &json(&o)["result"]["classify"][0]["report"];
    assert_eq!(r["vertices"], 17);
    assert_eq!(r["ternary"], true);
    assert_eq!(r["planar"], false);
    assert_eq!(r["alpha"], 6);
    assert_eq!(r["homology"]["homology_sphere_dim"], 5);
}

#[test]
fn construct_script_errors_name_the_line() {
    let s = tmp(
        "strict.fs",
        "start 2 2 2\nstep 0:a_1 1:a_1 x\nstep x 2:b_1\n",
    );
    let o = run(&["construct", "--script", s.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
    let o = run(&[
        "construct",
        "--script",
        s.to_str().unwrap(),
        "--mode",
        "loose",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(run(&["construct", "--corpus"]).status.code(), Some(2));
}

#[test]
fn accept_subset() {
    let o = run(&["accept", "--only", "1,4"]);
    assert_eq!(o.status.code(), Some(0));
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.contains("[PASS]  1") && text.contains("[PASS]  4"));
    assert!(text.ends_with("2 of 2 criteria passed\n"));
}
