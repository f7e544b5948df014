use std::process::{Command, Output};

use bbw_tilt::{BottResult, GradedHomProfile, TiltingReport, VanishingReport};
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bbw-tilt"))
        .args(args)
        .env_remove("BBW_TILT_THREADS")
        .output()
        .expect("spawn bbw-tilt")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json stdout")
}

#[test]
fn bott_json_and_text() {
    let out = run(&["bott", "0", "-2", "0", "-2"]);
    assert_eq!(out.status.code(), Some(0));
    let r: BottResult = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(r.degree(), Some(1));
    assert_eq!(r.h(1), 15u32.into());

    let out = run(&["--format", "text", "bott", "1", "0", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().contains("vanish"));
}

#[test]
fn lr_expansion() {
    let out = run(&["lr", "2,1", "2,1", "--rank", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let terms = v["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 5);
    assert!(terms.contains(&serde_json::json!({"weight": [3, 2, 1], "mult": "2"})));
}

#[test]
fn hom_grassmann_single_degree() {
    let out = run(&[
        "hom-grassmann",
        "--k",
        "2",
        "--n",
        "4",
        "--alpha",
        "0,0",
        "--beta",
        "2,2",
        "--sym-degree",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["h"], serde_json::json!({"0": "1", "1": "15"}));
}

#[test]
fn hom_total_round_trips() {
    let out = run(&[
        "hom-total",
        "--k",
        "2",
        "--n",
        "4",
        "--alpha",
        "0,0",
        "--beta",
        "2,2",
        "--cutoff",
        "6",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let p: GradedHomProfile = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(p.dim(1, 2), 15u32.into());
    assert_eq!(p.dim(1, 1), 1u32.into());
    let again = serde_json::to_string(&p).unwrap();
    assert_eq!(again.trim(), String::from_utf8(out.stdout).unwrap().trim());
}

#[test]
fn vanish_from_sets_exit_code() {
    let args = |from: &str| {
        run(&[
            "hom-total",
            "--k",
            "2",
            "--n",
            "4",
            "--alpha",
            "0,0",
            "--beta",
            "2,2",
            "--cutoff",
            "4",
            "--vanish-from",
            from,
        ])
    };
    assert_eq!(args("2").status.code(), Some(0));
    assert_eq!(args("1").status.code(), Some(2));
}

#[test]
fn check_tilting_finds_witnesses() {
    let out = run(&[
        "check-tilting",
        "--k",
        "2",
        "--n",
        "4",
        "--collection",
        "0,0;1,1;2,2;3,3",
        "--cutoff",
        "10",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let r: TiltingReport = serde_json::from_slice(&out.stdout).unwrap();
    assert!(!r.is_tilting());
    assert!(r.witnesses().all(|v| v.i == 1));
}

#[test]
fn check_tilting_projective_line_bundles() {
    let out = run(&[
        "check-tilting",
        "--k",
        "1",
        "--n",
        "3",
        "--collection",
        "0;1;2",
        "--cutoff",
        "10",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let r: TiltingReport = serde_json::from_slice(&out.stdout).unwrap();
    assert!(r.is_tilting());
}

#[test]
fn check_vanishing_round_trips() {
    let out = run(&[
        "check-vanishing",
        "--k",
        "2",
        "--n",
        "4",
        "--jmax",
        "3",
        "--cutoff",
        "10",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let r: VanishingReport = serde_json::from_slice(&out.stdout).unwrap();
    assert!(r.holds());
    assert_eq!(r.rows.len(), 4);
}

#[test]
fn reproduce_subcommands() {
    assert_eq!(
        run(&["reproduce", "g24", "--cutoff", "10"]).status.code(),
        Some(0)
    );
    assert_eq!(run(&["reproduce", "beilinson", "2"]).status.code(), Some(0));
    assert_eq!(
        run(&["reproduce", "tpn", "2", "--cutoff", "8"])
            .status
            .code(),
        Some(0)
    );
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(run(&[]).status.code(), Some(1));
    assert_eq!(run(&["bott"]).status.code(), Some(1));
    assert_eq!(
        run(&["lr", "2,x", "1", "--rank", "2"]).status.code(),
        Some(1)
    );
    assert_eq!(
        run(&[
            "hom-total",
            "--k",
            "5",
            "--n",
            "4",
            "--alpha",
            "0",
            "--beta",
            "0"
        ])
        .status
        .code(),
        Some(1)
    );
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn output_file() {
    let dir = std::env::temp_dir().join(format!("bbw-tilt-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bott.json");
    let out = run(&["--output", path.to_str().unwrap(), "bott", "3", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let r: BottResult = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(r.h(0), 3u32.into());
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn output_is_deterministic_across_thread_counts() {
    let args = [
        "check-tilting",
        "--k",
        "2",
        "--n",
        "4",
        "--collection",
        "0,0;1,1;2,2",
        "--cutoff",
        "12",
    ];
    let one = Command::new(env!("CARGO_BIN_EXE_bbw-tilt"))
        .args(args)
        .env("BBW_TILT_THREADS", "1")
        .output()
        .unwrap();
    let many = run(&[&["--threads", "4"], &args[..]].concat());
    assert_eq!(one.stdout, many.stdout);
    assert_eq!(run(&args).stdout, many.stdout);
}

#[test]
fn bad_thread_env_is_an_error() {
    let out = Command::new(env!("CARGO_BIN_EXE_bbw-tilt"))
        .args(["bott", "1", "0"])
        .env("BBW_TILT_THREADS", "lots")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let ok = Command::new(env!("CARGO_BIN_EXE_bbw-tilt"))
        .args(["--threads", "2", "bott", "1", "0"])
        .env("BBW_TILT_THREADS", "lots")
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
}
