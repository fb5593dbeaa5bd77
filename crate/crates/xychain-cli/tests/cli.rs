//! End-to-end tests of the `xychain` binary: argument handling, file and
//! stdout output, and the CSV contracts of each subcommand.

use std::fs;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_xychain"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary should launch")
}

fn stdout_of(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("output should be UTF-8")
}

const HEADER: &str = "lambda,vary_value,l,m,concurrence,sxx,syy,szz,mz_l,mz_m,degenerate";

#[test]
fn help_screens_exit_cleanly() {
    for args in [
        vec!["--help"],
        vec!["sweep", "--help"],
        vec!["oracle", "--help"],
        vec!["dump-profile", "--help"],
        vec!["preset", "--help"],
    ] {
        let out = run(&args);
        assert!(out.status.success(), "{args:?}");
    }
}

#[test]
fn sweep_writes_csv_to_stdout_and_file() {
    let args = [
        "sweep", "--n", "8", "--lambda", "0:1:0.5", "--pair", "4,5",
    ];
    let text = stdout_of(&args);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], HEADER);
    assert_eq!(lines.len(), 4);
    // lambda = 0 decouples the chain: no entanglement, empty vary field.
    assert!(lines[1].starts_with("0.00000000000e0,,4,5,0.00000000000e0,"));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.csv");
    let out = bin()
        .args(args)
        .arg("--out")
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert_eq!(fs::read_to_string(&path).unwrap(), text);
}

#[test]
fn sweep_defaults_to_the_central_bonds() {
    let text = stdout_of(&["sweep", "--n", "8", "--lambda", "1:1:1"]);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[1].contains(",3,4,"));
    assert!(lines[2].contains(",4,5,"));
}

#[test]
fn sweep_vary_produces_one_block_per_value() {
    let text = stdout_of(&[
        "sweep", "--n", "10", "--dist", "double-gaussian", "--zeta1", "0.5",
        "--lambda", "0.5:1:0.5", "--pair", "5,6", "--vary", "zeta2=0.2,0.7",
    ]);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 1 + 2 * 2);
    assert!(lines[1].starts_with("5.00000000000e-1,2.00000000000e-1,5,6,"));
    assert!(lines[3].starts_with("5.00000000000e-1,7.00000000000e-1,5,6,"));
}

#[test]
fn sweep_rejects_bad_arguments() {
    for args in [
        vec!["sweep", "--n", "8", "--pair", "5"],
        vec!["sweep", "--n", "8", "--pair", "6,5"],
        vec!["sweep", "--n", "8", "--pair", "4,9"],
        vec!["sweep", "--n", "8", "--lambda", "0:1"],
        vec!["sweep", "--n", "8", "--lambda", "1:0:0.5"],
        vec!["sweep", "--n", "8", "--vary", "zeta9=1"],
        vec!["sweep", "--n", "8", "--vary", "zeta2"],
        vec!["sweep", "--n", "8", "--gamma", "2"],
        vec!["sweep", "--boundary", "twisted"],
        vec!["sweep", "--dist", "cauchy"],
    ] {
        let out = run(&args);
        assert!(!out.status.success(), "{args:?} should fail");
        assert!(!out.stderr.is_empty(), "{args:?} should explain itself");
    }
}

#[test]
fn oracle_matches_sweep_on_a_small_chain() {
    let common = [
        "--n", "6", "--gamma", "0.8", "--dist", "gaussian", "--zeta1", "0.4",
        "--xi1", "0.3", "--lambda", "0.4:1.2:0.4", "--pair", "2,3",
    ];
    let fast = stdout_of(&[&["sweep"], &common[..]].concat());
    let slow = stdout_of(&[&["oracle"], &common[..]].concat());
    let parse = |text: &str| -> Vec<Vec<f64>> {
        text.lines()
            .skip(1)
            .map(|line| {
                line.split(',')
                    .filter_map(|f| f.parse::<f64>().ok())
                    .collect()
            })
            .collect()
    };
    let (a, b) = (parse(&fast), parse(&slow));
    assert_eq!(a.len(), 3);
    assert_eq!(a.len(), b.len());
    for (ra, rb) in a.iter().zip(&b) {
        assert_eq!(ra.len(), rb.len());
        for (x, y) in ra.iter().zip(rb) {
            assert!((x - y).abs() < 1e-8, "sweep {x} vs oracle {y}");
        }
    }
}

#[test]
fn oracle_refuses_large_chains() {
    let out = run(&["oracle", "--n", "15", "--lambda", "0.5:0.5:1"]);
    assert!(!out.status.success());
    let message = String::from_utf8_lossy(&out.stderr);
    assert!(message.contains("15"), "{message}");
    assert!(message.contains("14"), "{message}");
}

#[test]
fn dump_profile_shows_the_field_bump() {
    // A unit-strength field spike of width 10 at the center site (n+1)/2 = 51
    // doubles the local field: h_51 = 2.
    let text = stdout_of(&[
        "dump-profile", "--n", "101", "--dist", "gaussian", "--xi1", "1",
        "--epsilon", "10", "--boundary", "periodic",
    ]);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "index,alpha,beta,J,h");
    assert_eq!(lines.len(), 102);
    let center: Vec<&str> = lines[51].split(',').collect();
    assert_eq!(center[0], "51");
    assert_eq!(center[2], "1.00000000000e0");
    assert_eq!(center[4], "2.00000000000e0");
    // Periodic: every site carries an outgoing bond.
    let last: Vec<&str> = lines[101].split(',').collect();
    assert_ne!(last[1], "");
    assert_ne!(last[3], "");
}

#[test]
fn dump_profile_open_chain_has_no_final_bond() {
    let text = stdout_of(&["dump-profile", "--n", "5", "--lambda", "0.7"]);
    let lines: Vec<&str> = text.lines().collect();
    let last: Vec<&str> = lines[5].split(',').collect();
    assert_eq!(last[0], "5");
    assert_eq!(last[1], "");
    assert_eq!(last[3], "");
    // Uniform chain at lambda = 0.7: J = 2 lambda = 1.4 on every bond.
    let first: Vec<&str> = lines[1].split(',').collect();
    assert_eq!(first[3], "1.40000000000e0");
    assert_eq!(first[4], "1.00000000000e0");
}

#[test]
fn preset_requires_a_known_name() {
    let out = run(&["preset", "fig9z"]);
    assert!(!out.status.success());
    let message = String::from_utf8_lossy(&out.stderr);
    assert!(message.contains("fig1a"), "{message}");
}

#[test]
fn sweep_reruns_are_byte_identical() {
    let args = [
        "sweep", "--n", "12", "--boundary", "periodic", "--dist", "bimodal",
        "--zeta1", "0.5", "--xi1", "0.2", "--lambda", "0:2:0.25",
        "--vary", "zeta2=0.3,1.0",
    ];
    assert_eq!(stdout_of(&args), stdout_of(&args));
}
