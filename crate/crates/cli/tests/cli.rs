//! End-to-end runs of the `yokonuma` binary.

use std::path::Path;
use std::process::{Command, Output};

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::Value;
use yokonuma::verify::random_element;
use yokonuma::ykalgebra::YAlgebra;
use yokonuma_cli::expr::{evaluate, parse};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_yokonuma"))
        .args(args)
        .env_remove("YOKONUMA_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn json_ok(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn json_err(args: &[&str], code: i32) -> Value {
    let out = run(args);
    assert_eq!(out.status.code(), Some(code), "{args:?}");
    serde_json::from_slice(&out.stderr).expect("stderr is JSON")
}

#[test]
fn dimensions() {
    assert_eq!(json_ok(&["dim", "ftl", "-d", "2", "-n", "3"]), serde_json::json!({ "dim": 46 }));
    assert_eq!(json_ok(&["dim", "ctl", "-d", "2", "-n", "3"])["dim"], 47);
    assert_eq!(json_ok(&["dim", "tl", "-n", "4"])["dim"], 14);
    assert_eq!(json_ok(&["dim", "y", "-d", "3", "-n", "3"])["dim"], 162);
}

#[test]
fn quadratic_relation_through_the_parser() {
    let lhs = json_ok(&["mul", "-d", "2", "-n", "3", "g1*g1"]);
    let rhs = json_ok(&["mul", "-d", "2", "-n", "3", "q + (q-1)*e1*g1"]);
    assert_eq!(lhs["terms"], rhs["terms"]);
    let zero = json_ok(&["mul", "-d", "3", "-n", "3", "t1^3 - 1"]);
    assert_eq!(zero["terms"], serde_json::json!([]));
}

#[test]
fn errors_are_json_with_exit_codes() {
    let err = json_err(&["mul", "-d", "2", "-n", "3", "g1*t4"], 2);
    assert_eq!(err["error"]["kind"], "evaluation");
    let err = json_err(&["mul", "-d", "2", "-n", "3", "g1*(t2"], 2);
    assert_eq!(err["error"]["kind"], "parse");
    assert_eq!(err["error"]["position"], 6);
    json_err(&["rep", "--shape", "2,x"], 2);
}

#[test]
fn expressions_round_trip_through_text() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for (d, n) in [(2, 3), (3, 3), (1, 4)] {
        let y = YAlgebra::new(d, n).unwrap();
        let e1 = y.e(1).unwrap();
        for i in 0..10 {
            let mut x = random_element(&y, &mut rng, 3);
            if i % 2 == 1 {
                x = x.mul(&e1);
            }
            let text = x.to_expression();
            let back = evaluate(&parse(&text).unwrap(), &y).unwrap();
            assert_eq!(back, x, "{text}");
        }
    }
}

#[test]
fn representation_and_basis_output() {
    let rep = json_ok(&["rep", "--shape", "2,1|1"]);
    assert_eq!(rep["dim"], 8);
    assert_eq!(rep["relations"]["passed"], true);
    let basis = json_ok(&["basis", "ctl", "-d", "2", "-n", "3"]);
    assert_eq!(basis["count"], 47);
    assert_eq!(basis["elements"].as_array().unwrap().len(), 47);
    let pairs = json_ok(&["enumerate", "jonespairs", "-n", "5"]);
    assert_eq!(pairs["count"], 42);
}

#[test]
fn verify_all_suites() {
    for (d, n) in [(1, 3), (1, 4), (2, 2), (2, 3), (2, 4), (3, 3)] {
        let (d, n) = (d.to_string(), n.to_string());
        let report = json_ok(&["verify", "-d", &d, "-n", &n, "--suite", "all"]);
        assert_eq!(report["passed"], true, "d={d} n={n}");
    }
}

fn read(path: &Path) -> Vec<u8> {
    std::fs::read(path).unwrap()
}

#[test]
fn warm_and_cold_cache_agree() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache");
    let cache = cache.to_str().unwrap();
    let outputs: Vec<_> = ["cold", "warm", "plain"]
        .iter()
        .map(|tag| dir.path().join(format!("{tag}.json")))
        .collect();
    for (path, cached) in outputs.iter().zip([true, true, false]) {
        let mut args = vec!["--output", path.to_str().unwrap()];
        if cached {
            args.extend(["--cache-dir", cache]);
        }
        args.extend(["basis", "ftl", "-d", "2", "-n", "3"]);
        assert!(run(&args).status.success());
    }
    let entries: Vec<_> = std::fs::read_dir(cache).unwrap().map(|e| e.unwrap().file_name()).collect();
    assert_eq!(entries.len(), 1, "{entries:?}");
    assert_eq!(read(&outputs[0]), read(&outputs[1]));
    assert_eq!(read(&outputs[0]), read(&outputs[2]));
}
