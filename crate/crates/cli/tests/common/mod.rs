//! Golden cases and the exit-status table, shared by the golden and
//! acceptance targets.

#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

pub const FIXTURES: [&str; 4] = ["boasso-2x2", "heisenberg-3", "diag-1-2", "random-nilpotent-5-3-11"];

fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden")
}

pub fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_liespectra")).args(args).output().expect("binary runs")
}

/// Every (golden file, arguments, exit status) case.
pub fn cases() -> Vec<(String, Vec<String>, i32)> {
    let mut out = Vec::new();
    for fx in FIXTURES {
        let zero = vec![
            "0";
            if fx == "diag-1-2" {
                1
            } else if fx == "boasso-2x2" {
                2
            } else {
                3
            }
        ]
        .join(",");
        let commands: Vec<(&str, Vec<String>)> = vec![
            ("check", vec![]),
            ("weights", vec![]),
            ("spectrum", vec![]),
            ("slodkowski", vec!["--k".into(), "1".into()]),
            ("homology", vec!["--character".into(), zero]),
            ("dual", vec![]),
            ("tensor", vec![]),
            ("verify", vec![]),
        ];
        for (cmd, extra) in commands {
            let mut args = vec![cmd.to_string(), "--fixture".into(), fx.to_string()];
            args.extend(extra);
            // The solvable example is not nilpotent, so `verify` refuses it.
            let status = if cmd == "verify" && fx == "boasso-2x2" { 2 } else { 0 };
            out.push((format!("{fx}.{cmd}.json"), args, status));
        }
    }
    out.push((
        "boasso-2x2.homology-on-spectrum.json".into(),
        ["homology", "--fixture", "boasso-2x2", "--character", "0,0.5"].map(String::from).to_vec(),
        0,
    ));
    out.push((
        "boasso-2x2.spectrum.txt".into(),
        ["spectrum", "--fixture", "boasso-2x2", "--pretty"].map(String::from).to_vec(),
        0,
    ));
    out.push((
        "heisenberg-3.verify.txt".into(),
        ["verify", "--fixture", "heisenberg-3", "--pretty"].map(String::from).to_vec(),
        0,
    ));
    out
}

/// Compares every case; returns the list of mismatches.
pub fn mismatches() -> Vec<String> {
    let bless = std::env::var_os("LIESPECTRA_BLESS").is_some();
    let mut bad = Vec::new();
    for (file, args, status) in cases() {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let out = run(&args);
        let code = out.status.code().unwrap_or(-1);
        if code != status {
            bad.push(format!("{file}: exit {code}, expected {status}: {}", String::from_utf8_lossy(&out.stderr)));
            continue;
        }
        let path = golden_dir().join(&file);
        if bless {
            std::fs::create_dir_all(golden_dir()).unwrap();
            std::fs::write(&path, &out.stdout).unwrap();
            continue;
        }
        match std::fs::read(&path) {
            Ok(want) if want == out.stdout => {}
            Ok(_) => bad.push(format!("{file}: output differs")),
            Err(e) => bad.push(format!("{file}: {e}")),
        }
    }
    bad
}

/// (arguments, expected exit status, expected stderr fragment)
pub fn exit_cases() -> Vec<(Vec<&'static str>, i32, &'static str)> {
    vec![
        (vec!["verify", "--fixture", "heisenberg-3"], 0, ""),
        (vec!["spectrum", "--fixture", "boasso-2x2"], 0, ""),
        (vec!["verify", "--fixture", "boasso-2x2"], 2, "nilpotent"),
        (vec!["check"], 2, "--input or --fixture"),
        (vec!["check", "--fixture", "nope"], 2, "unknown fixture"),
        (vec!["frobnicate", "--fixture", "diag-1-2"], 2, "invalid value"),
        (vec!["slodkowski", "--fixture", "heisenberg-3", "--k", "4"], 2, "outside 0..=3"),
        (vec!["slodkowski", "--fixture", "heisenberg-3"], 2, "needs --k"),
        (vec!["homology", "--fixture", "boasso-2x2", "--character", "1,0"], 2, "does not vanish"),
        (vec!["homology", "--fixture", "boasso-2x2", "--character", "0"], 2, "1 values given"),
        (vec!["check", "--input", "/nonexistent/doc.json"], 2, "cannot read"),
        (vec!["check", "--fixture", "diag-1-2", "--eps-rank", "-1"], 2, "tolerances"),
    ]
}

/// Runs every exit-status case; returns the ones that break the contract.
pub fn exit_mismatches() -> Vec<String> {
    let mut bad = Vec::new();
    for (args, status, needle) in exit_cases() {
        let out = run(&args);
        let err = String::from_utf8_lossy(&out.stderr);
        if out.status.code() != Some(status) {
            bad.push(format!("{args:?}: exit {:?}, expected {status}: {err}", out.status.code()));
        } else if !err.contains(needle) {
            bad.push(format!("{args:?}: stderr lacks {needle:?}: {err}"));
        } else if status != 0 && !out.stdout.is_empty() {
            bad.push(format!("{args:?}: wrote a report despite failing"));
        }
    }
    bad
}
