//! The `mutknot` binary: subcommands, JSON output and exit codes.

mod common;

use std::process::{Command, Output};

use serde_json::Value;

const TREFOIL: &str = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mutknot")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid json")
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["parse", TREFOIL]).status.code(), Some(0));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&[]).status.code(), Some(1));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&["invariants", TREFOIL, "--colored-jones", "x"]).status.code(), Some(1));
    assert_eq!(run(&["parse", "X(1,2,3"]).status.code(), Some(2));
    assert_eq!(run(&["parse", "no-such-knot"]).status.code(), Some(2));
    assert_eq!(run(&["close", "--tangle", "kt", "--closure", "pair-a"]).status.code(), Some(2));
    assert_eq!(run(&["invariants", TREFOIL, "--colored-jones", "9"]).status.code(), Some(3));
    assert_eq!(run(&["invariants", TREFOIL, "--kh", "--max-kh-crossings", "2"]).status.code(), Some(3));
}

#[test]
fn json_everywhere() {
    let p = json(&["--json", "parse", TREFOIL]);
    assert_eq!(p["diagram"]["writhe"], -3);
    let inv = json(&["--json", "invariants", TREFOIL, "--jones", "--signature", "--kh", "--colored-jones", "2"]);
    assert_eq!(inv["signature"], 2);
    assert_eq!(inv["jones"], inv["colored_jones"]["value"]);
    assert!(inv["khovanov"]["ranks"].as_str().unwrap().contains("1_{-9}^{-3}"));
    let m = json(&["--json", "mutate", "--tangle", "kt", "-s", "rz", "--closure", "kt-context"]);
    assert_eq!(m["mutant"]["crossings"], 11);
    let c = json(&["--json", "cable", "--tangle", "twist2", "--spec", "2,2"]);
    assert_eq!(c["crossings"], 8);
    let k = json(&["--json", "close", "--tangle", "twist3", "--closure", "numerator"]);
    assert_eq!(k["is_knot"], true);
    let e = run(&["--json", "parse", "X(1,2"]);
    let v: Value = serde_json::from_slice(&e.stdout).unwrap();
    assert_eq!(v["exit_code"], 2);
}

#[test]
fn mutate_a_knot_region() {
    let kt = mutknot::mutation::data::KINOSHITA_TERASAKA_PD;
    let out = json(&["--json", "mutate", kt, "--region", "4,5,7,8,9,10", "-s", "rz"]);
    assert_eq!(out["mutant"]["crossings"], 11);
    let pd = out["mutant"]["pd"].as_str().unwrap().to_string();
    let a = json(&["--json", "invariants", kt, "--jones", "--alexander"]);
    let b = json(&["--json", "invariants", &pd, "--jones", "--alexander"]);
    assert_eq!(a["jones"], b["jones"]);
    assert_eq!(a["alexander"], b["alexander"]);
}

#[test]
fn knot_names_resolve_in_a_directory() {
    let dir = common::knots_dir();
    let dir = dir.to_str().unwrap();
    let a = json(&["--json", "--knots", dir, "invariants", "14n22185", "--jones"]);
    let b = json(&["--json", "--knots", dir, "invariants", "14n22185*", "--jones"]);
    assert_eq!(a["name"], "14n22185");
    assert_eq!(b["name"], "14n22185*");
    assert_ne!(a["jones"], b["jones"]);
}
