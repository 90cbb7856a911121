use std::process::{Command, Output};

use hexaflex::REFERENCE_TABLE;

fn hexaflex(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hexaflex")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn count_prints_the_class_count() {
    let out = hexaflex(&["count", "--n", "6"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "3");
    assert_eq!(stdout(&hexaflex(&["count", "--n", "26"])).trim(), "217245");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(hexaflex(&["count", "--n", "2"]).status.code(), Some(2));
    assert_eq!(hexaflex(&["table", "--min", "9", "--max", "3"]).status.code(), Some(2));
    assert_eq!(hexaflex(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(hexaflex(&["net", "--n", "6", "--index", "99"]).status.code(), Some(2));
}

#[test]
fn invalid_signs_exit_3() {
    let out = hexaflex(&["net", "--signs", "+-+-"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("alternates"));
    assert_eq!(hexaflex(&["net", "--signs", "+++x"]).status.code(), Some(3));
}

#[test]
fn single_row_table() {
    let out = hexaflex(&["table", "--min", "7", "--max", "7"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "n,H\n7,3\n");
}

#[test]
fn printable_table_matches_reference() {
    let out = hexaflex(&["table", "--min", "3", "--max", "26", "--printable"]);
    assert!(out.status.success());
    let mut expected = String::from("n,H,Hp\n");
    for (n, h, hp) in REFERENCE_TABLE {
        expected += &format!("{n},{h},{hp}\n");
    }
    assert_eq!(stdout(&out), expected);
}

#[test]
fn enumerate_writes_json_lines() {
    let out = hexaflex(&["enumerate", "--n", "3"]);
    assert_eq!(stdout(&out), "{\"n\":3,\"signs\":\"+++\",\"sum\":3,\"printable\":true}\n");

    let out = hexaflex(&["enumerate", "--n", "6", "--with-labels"]);
    let lines: Vec<serde_json::Value> =
        stdout(&out).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    let signs: Vec<&str> = lines.iter().map(|v| v["signs"].as_str().unwrap()).collect();
    assert_eq!(signs, ["++++++", "+++---", "++-+--"]);
    for v in &lines {
        let mut labels: Vec<u64> = v["labels"].as_array().unwrap().iter().map(|l| l.as_u64().unwrap()).collect();
        assert_eq!(labels[0], 1);
        labels.sort();
        assert_eq!(labels, (1..=6).collect::<Vec<_>>());
    }

    let out = hexaflex(&["enumerate", "--n", "7"]);
    let lines: Vec<serde_json::Value> =
        stdout(&out).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 3);
    let unprintable: Vec<_> = lines.iter().filter(|v| v["printable"] == false).collect();
    assert_eq!(unprintable.len(), 1);
    assert_eq!(unprintable[0]["signs"], "++++-+-");
}

#[test]
fn net_matches_goldens() {
    for (side, golden) in [
        ("front", include_str!("../../core/tests/golden/trihexaflexagon_front.svg")),
        ("back", include_str!("../../core/tests/golden/trihexaflexagon_back.svg")),
    ] {
        let out = hexaflex(&["net", "--signs", "+++", "--glue", "false", "--side", side]);
        assert!(out.status.success());
        assert_eq!(stdout(&out), golden);
    }
}

#[test]
fn net_by_index_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("net.svg");
    let out = hexaflex(&["net", "--n", "6", "--index", "0", "--side", "back", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let svg = std::fs::read_to_string(&path).unwrap();
    assert!(svg.starts_with("<?xml"));
    assert!(svg.contains("(back)"));
    // 18 cells plus the glue triangle.
    assert_eq!(svg.matches("<polygon").count(), 19);
}

#[test]
fn output_is_deterministic() {
    let args = ["enumerate", "--n", "12", "--with-labels"];
    assert_eq!(hexaflex(&args).stdout, hexaflex(&args).stdout);
    let args = ["net", "--n", "9", "--index", "2"];
    assert_eq!(hexaflex(&args).stdout, hexaflex(&args).stdout);
}

#[test]
fn verify_passes() {
    let out = hexaflex(&["verify", "--max-n", "10"]);
    let text = stdout(&out);
    assert!(out.status.success(), "{text}");
    assert!(text.lines().all(|l| l.starts_with("PASS")), "{text}");
}

#[test]
fn verify_catches_the_printed_bracelet_branch() {
    let out = hexaflex(&["verify", "--max-n", "10", "--paper-bracelet"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL"));
    assert!(String::from_utf8_lossy(&out.stderr).contains("(4,2)"));
}
