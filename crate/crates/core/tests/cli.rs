//! CLI behavior through the in-process entry point and the binary.

use std::fs;
use std::path::PathBuf;
use std::process::Command;

use dedekind::cli::{execute, exit_code, Execution};
use dedekind::{BigCount, Error};

fn run(args: &[&str]) -> Execution {
    execute(std::iter::once("dedekind").chain(args.iter().copied()))
}

fn poset_file(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("dedekind-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    fs::write(&path, body).unwrap();
    path
}

#[test]
fn count_examples() {
    assert_eq!(run(&["count", "--n", "3"]).stdout, "20\n");
    assert_eq!(run(&["count", "--n", "0"]).stdout, "2\n");
    let chain3 = poset_file("chain3.txt", "n=2\n00\n10\n11\n");
    assert_eq!(run(&["count", "--poset", chain3.to_str().unwrap()]).stdout, "4\n");
    let chain4 = poset_file("chain4.txt", "n=3\n000\n100\n110\n111\n");
    assert_eq!(run(&["count", "--poset", chain4.to_str().unwrap()]).stdout, "5\n");
}

#[test]
fn count_json_round_trips() {
    let out = run(&["--format", "json", "count", "--n", "5"]);
    assert_eq!(out.code, 0);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    let count: BigCount = v["result"].as_str().unwrap().parse().unwrap();
    assert_eq!(count, 7581u64);
    for key in ["command", "n", "result", "elapsed_ms", "threads", "cache"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert!(v["cache"]["hits"].is_u64() && v["cache"]["misses"].is_u64());
}

#[test]
fn verify_examples() {
    let out = run(&["verify", "--theorem", "corollary", "--n", "4"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.ends_with("16/16 splits sum to 168\n"), "{}", out.stdout);
    let out = run(&["verify", "--theorem", "lemma3", "--n", "5"]);
    assert!(out.stdout.ends_with("both parities complete, size 16\n"));
    let out = run(&["verify", "--theorem", "1", "--n", "3", "--samples", "50", "--seed", "7"]);
    assert!(out.stdout.ends_with("50/50 exact matches\n"));
    assert_eq!(out.stdout.lines().filter(|l| l.starts_with("PASS")).count(), 50);
}

#[test]
fn verify_echoes_seed_and_fails_with_counterexample() {
    let out = run(&["--format", "json", "verify", "--theorem", "1", "--n", "3", "--samples", "5", "--seed", "11"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["result"]["seed"], 11);
    let out = run(&["verify", "--theorem", "lemma2", "--n", "3"]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("counterexample: A={100,010,110,101}"), "{}", out.stdout);
}

#[test]
fn decompose_examples() {
    assert_eq!(run(&["decompose", "--n", "2"]).stdout, "2*2^0 + 1*2^2 = 6\n");
    let out = run(&["--format", "json", "decompose", "--n", "3"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    let total: u64 = v["polynomial"]
        .as_object()
        .unwrap()
        .iter()
        .map(|(k, c)| c.as_str().unwrap().parse::<u64>().unwrap() << k.parse::<u32>().unwrap())
        .sum();
    assert_eq!(total, 20);
    let csv = run(&["--format", "csv", "decompose", "--n", "4"]).stdout;
    assert!(csv.starts_with("exponent,coefficient,term_value\n"));
    assert!(csv.ends_with("total,,168\n"));
    assert_eq!(run(&["decompose", "--n", "7"]).code, 2);
}

#[test]
fn check_complete_examples() {
    let even = poset_file("even4.txt", "n=4\n0000\n0011\n0101\n0110\n1001\n1010\n1100\n1111\n");
    let out = run(&["check-complete", "--subset", even.to_str().unwrap()]);
    assert!(out.stdout.contains("complete: yes"));
    assert!(out.stdout.contains("minimal (size 8, bound 8)"));

    let empty = poset_file("empty2.txt", "n=2\n");
    let out = run(&["check-complete", "--n", "2", "--subset", empty.to_str().unwrap()]);
    assert!(out.stdout.contains("complete: no"));
    assert!(out.stdout.contains("witness: apex 00"));

    let full = poset_file("full2.txt", "n=2\n00\n01\n10\n11\n");
    let out = run(&["check-complete", "--subset", full.to_str().unwrap()]);
    assert!(out.stdout.contains("complete: yes"));
    assert!(out.stdout.contains("complete_but_not_minimal"));
}

#[test]
fn exit_codes() {
    let bad = poset_file("bad.txt", "n=2\n0x\n");
    assert_eq!(run(&["count", "--poset", bad.to_str().unwrap()]).code, 2);
    assert_eq!(run(&["count", "--n", "9"]).code, 2);
    assert_eq!(run(&["count", "--n", "6", "--node-budget", "3"]).code, 3);
    assert_eq!(run(&["frobnicate"]).code, 2);
    assert_eq!(exit_code(&Error::Falsified("x".into())), 4);
    assert_eq!(exit_code(&Error::BudgetExceeded("x".into())), 3);
}

#[test]
fn binary_honors_thread_env_and_flag() {
    let exe = env!("CARGO_BIN_EXE_dedekind");
    let threads = |extra: &[&str]| -> u64 {
        let out = Command::new(exe)
            .env("DEDEKIND_THREADS", "3")
            .args(["--format", "json", "count", "--n", "4"])
            .args(extra)
            .output()
            .unwrap();
        assert!(out.status.success());
        let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(v["result"], "168");
        v["threads"].as_u64().unwrap()
    };
    assert_eq!(threads(&[]), 3);
    assert_eq!(threads(&["--threads", "2"]), 2);

    let out = Command::new(exe).args(["count", "--n", "9"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
}
