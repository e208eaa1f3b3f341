//! Byte-for-byte report comparisons against files in `tests/golden/`, plus the
//! exit-status contract. Run with `LIESPECTRA_BLESS=1` to rewrite the files.

mod common;

use common::{exit_mismatches, mismatches, run, FIXTURES};

#[test]
fn reports_match_golden_files() {
    let bad = mismatches();
    assert!(bad.is_empty(), "{}", bad.join("\n"));
}

#[test]
fn reports_are_deterministic() {
    let a = run(&["spectrum", "--fixture", "random-nilpotent-5-3-11"]);
    let b = run(&["spectrum", "--fixture", "random-nilpotent-5-3-11"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn exit_statuses_follow_the_contract() {
    let bad = exit_mismatches();
    assert!(bad.is_empty(), "{}", bad.join("\n"));
}

#[test]
fn input_errors_carry_their_position() {
    let dir = std::env::temp_dir().join(format!("liespectra-golden-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.json");
    std::fs::write(
        &bad,
        "{\n  \"dim\": 2,\n  \"generators\": [\n    {\"name\": \"a\", \"matrix\": [[[0, 0], [1, 0]], [[0, 0]]]}\n  ]\n}\n",
    )
    .unwrap();
    let out = run(&["check", "--input", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("generator \"a\", row 1"));
    std::fs::write(&bad, "{\n  \"dim\": 2,\n  \"generators\": [}\n").unwrap();
    let out = run(&["check", "--input", bad.to_str().unwrap()]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn written_documents_read_back_unchanged() {
    let dir = std::env::temp_dir().join(format!("liespectra-doc-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    for fx in FIXTURES {
        let dual = run(&["dual", "--fixture", fx]);
        let path = dir.join(format!("{fx}.dual.json"));
        std::fs::write(&path, &dual.stdout).unwrap();
        let back = run(&["dual", "--input", path.to_str().unwrap()]);
        let text = String::from_utf8(back.stdout).unwrap();
        // Transposing twice restores the matrices; only the names change.
        let orig_doc = run(&["check", "--fixture", fx]);
        let orig_doc: serde_json::Value = serde_json::from_slice(&orig_doc.stdout).unwrap();
        let twice: serde_json::Value = serde_json::from_str(&text).unwrap();
        let gens =
            |v: &serde_json::Value| v["generators"].as_array().unwrap().iter().map(|g| g["matrix"].clone()).collect::<Vec<_>>();
        assert_eq!(gens(&orig_doc["input"]), gens(&twice), "{fx}");
    }
    std::fs::remove_dir_all(&dir).ok();
}
