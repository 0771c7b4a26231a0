use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_copthrottle"))
        .args(args)
        .env_remove("COPTHROTTLE_BUDGET")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn cop_throttling_of_a_path() {
    let v = json(&run(&["compute", "thc", "--family", "path n=9"]));
    assert_eq!(v["thc"], 4);
    assert_eq!(v["n"], 9);
    let witness = v["witness"].as_array().unwrap().len() as u64;
    assert_eq!(v["k"].as_u64(), Some(witness));
}

#[test]
fn psd_throttling_and_forcing_numbers() {
    let v = json(&run(&["compute", "thplus", "--family", "path n=9"]));
    assert_eq!(v["th"], 4);
    let v = json(&run(&["compute", "z", "--family", "cycle n=6"]));
    assert_eq!(v["value"], 2);
    let v = json(&run(&["compute", "zplus", "--family", "star k=4"]));
    assert_eq!(v["value"], 1);
}

#[test]
fn graph_input_forms_agree() {
    let g6 = run(&["family", "petersen"]);
    assert!(g6.status.success());
    let g6 = String::from_utf8(g6.stdout).unwrap();
    let edges = run(&["family", "petersen", "--emit", "edges"]);
    let dir = std::env::temp_dir().join(format!("copthrottle-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let (f1, f2) = (dir.join("p.g6"), dir.join("p.edges"));
    std::fs::write(&f1, &g6).unwrap();
    std::fs::write(&f2, &edges.stdout).unwrap();

    let a = json(&run(&["compute", "copnumber", "--graph6", g6.trim()]));
    let b = json(&run(&["compute", "copnumber", "--file", f1.to_str().unwrap()]));
    let c = json(&run(&["compute", "copnumber", "--file", f2.to_str().unwrap()]));
    assert_eq!(a["value"], 3);
    assert_eq!(a, b);
    assert_eq!(a, c);
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn capture_time_of_given_cops() {
    let v = json(&run(&["compute", "captset", "--family", "path n=5", "--cops", "2"]));
    assert_eq!(v["value"], 2);
    let v = json(&run(&["compute", "captk", "--k", "1", "--family", "cycle n=5"]));
    assert_eq!(v["value"], "inf");
}

#[test]
fn classification_label() {
    let v = json(&run(&["classify", "--family", "complete n=5"]));
    assert_eq!(v["class"], 2);
    assert_eq!(v["label"], "2");
}

#[test]
fn traces_are_written() {
    let dir = std::env::temp_dir().join(format!("copthrottle-trace-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("f.json");
    let v = json(&run(&[
        "trace", "forcing", "--family", "path n=5", "--cops", "0", "--out", out.to_str().unwrap(),
    ]));
    assert_eq!(v["propagation_time"], 4);
    let written: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(written["propagation_time"], 4);

    let out = dir.join("g.json");
    let v = json(&run(&["trace", "game", "--family", "path n=5", "--cops", "2", "--out", out.to_str().unwrap()]));
    assert_eq!(v["capture_time"], 2);
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn formulas_verify() {
    let out = run(&["--table", "verify", "formulas"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains(" 0 failed"), "{text}");
}

#[test]
fn exit_codes() {
    // Usage errors.
    assert_eq!(run(&["compute", "thc"]).status.code(), Some(2));
    assert_eq!(run(&["compute", "thc", "--graph6", "!!"]).status.code(), Some(2));
    assert_eq!(run(&["compute", "radk", "--family", "path n=4"]).status.code(), Some(2));
    assert_eq!(run(&["compute", "thc", "--family", "nosuchfamily"]).status.code(), Some(2));
    // Budget.
    let out = run(&["--budget", "10", "compute", "thc", "--family", "hypercube m=4"]);
    assert_eq!(out.status.code(), Some(3));
    let out = Command::new(env!("CARGO_BIN_EXE_copthrottle"))
        .args(["compute", "captk", "--k", "2", "--family", "petersen"])
        .env("COPTHROTTLE_BUDGET", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn unquoted_family_and_stdin() {
    let v = json(&run(&["compute", "thc", "--family", "stellated_wheel", "m=10"]));
    assert_eq!(v["thc"], 3);
    let v = json(&run(&["compute", "girth", "--graph6", "@"]));
    assert_eq!(v["value"], "inf");

    let mut child = Command::new(env!("CARGO_BIN_EXE_copthrottle"))
        .args(["compute", "burn"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    use std::io::Write;
    child.stdin.take().unwrap().write_all(b"0 1\n1 2\n2 3\n3 4\n").unwrap();
    let v = json(&child.wait_with_output().unwrap());
    assert_eq!(v["value"], 3);
}
