use std::process::{Command, Output};

use serde_json::Value;

fn repstab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_repstab"))
        .args(args)
        .env_remove("REPSTAB_ORACLE_LIMIT")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = repstab(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn char_golden_values() {
    assert_eq!(stdout(&["char", "--d", "2", "--k", "3", "--i", "3", "--n", "6"]), "s[6] + s[5,1] + s[4,2] + s[3,3]\n");
    assert_eq!(stdout(&["char", "--d", "2", "--k", "3", "--i", "1", "--n", "8"]), "0\n");
    assert_eq!(stdout(&["char", "--d", "2", "--k", "3", "--i", "3", "--n", "2"]), "0\n");
    // the oracle route for the same case
    let via_oracle = stdout(&["char", "--d", "2", "--k", "3", "--i", "3", "--n", "6", "--oracle"]);
    assert_eq!(via_oracle, "s[6] + s[5,1] + s[4,2] + s[3,3]\n");
    assert_eq!(stdout(&["char", "--d", "2", "--lambda", "[2]", "--i", "1", "--n", "3"]), "s[3] + s[2,1]\n");
}

#[test]
fn char_formats() {
    let csv = stdout(&["char", "--d", "2", "--k", "3", "--i", "4", "--n", "5", "--format", "csv"]);
    assert_eq!(csv, "partition,coefficient\n\"[4,1]\",1\n\"[3,2]\",1\n\"[3,1,1]\",1\n");
    let json: Value = serde_json::from_str(&stdout(&["char", "--d", "2", "--k", "3", "--i", "4", "--n", "5", "--format", "json"])).unwrap();
    assert_eq!(json["char"]["[3,1,1]"], "1");
    assert_eq!(json["k"], 3);
}

#[test]
fn table_csv_is_bit_exact() {
    assert_eq!(stdout(&["table", "--d", "2", "--k", "3", "--i", "3..5", "--format", "csv"]), "k,i,bound\n3,3,6\n3,4,7\n3,5,8\n");
    assert_eq!(stdout(&["table", "--d", "2", "--k", "4", "--i", "5..7", "--format", "csv"]), "k,i,bound\n4,5,8\n4,6,9\n4,7,10\n");
}

#[test]
fn table_nine_equal() {
    assert_eq!(stdout(&["table", "--d", "2", "--k", "9", "--i", "15..16", "--format", "csv"]), "k,i,bound\n9,15,18\n9,16,19\n");
}

#[test]
fn table_text_layout() {
    let text = stdout(&["table", "--k", "3", "--i", "3..4"]);
    assert_eq!(text, "k=3:\ni     | 3 | 4\nbound | 6 | 7\n");
}

#[test]
fn table_marks_short_horizons() {
    let csv = stdout(&["table", "--k", "3", "--i", "4", "--horizon", "6", "--format", "csv"]);
    assert!(csv.starts_with("k,i,bound\n3,4,horizon-limited("), "{csv}");
}

/// CSV bound cell recomputed from the JSON report.
fn cell_from_json(report: &Value) -> String {
    match (&report["sharp_bound"], report["certified"].as_bool().unwrap()) {
        (Value::String(s), _) => s.clone(),
        (Value::Number(n), true) => n.to_string(),
        (Value::Number(n), false) => format!("horizon-limited({n})"),
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn table_csv_and_json_agree() {
    for args in [&["--k", "3", "--i", "1..5"][..], &["--k", "4", "--i", "4..6", "--horizon", "9"][..]] {
        let mut csv_args = vec!["table", "--format", "csv"];
        csv_args.extend_from_slice(args);
        let mut json_args = vec!["table", "--format", "json"];
        json_args.extend_from_slice(args);
        let csv = stdout(&csv_args);
        let json: Value = serde_json::from_str(&stdout(&json_args)).unwrap();

        let mut reader = csv::Reader::from_reader(csv.as_bytes());
        let rows: Vec<(String, String, String)> = reader.deserialize().map(Result::unwrap).collect();
        let reports = json.as_array().unwrap();
        assert_eq!(rows.len(), reports.len());
        for ((k, i, bound), r) in rows.iter().zip(reports) {
            assert_eq!(k, &r["k"].to_string());
            assert_eq!(i, &r["i"].to_string());
            assert_eq!(bound, &cell_from_json(r));
            // every characteristic in the report parses back
            for (_, ch) in r["chars"].as_object().unwrap() {
                let f: repstab_core::SymmetricFunction = serde_json::from_value(ch.clone()).unwrap();
                assert!(f.is_schur_positive_integral());
            }
        }
    }
}

#[test]
fn verify_examples_match() {
    for args in [
        &["verify", "--d", "2", "--lambda", "[2]", "--n-max", "5"][..],
        &["verify", "--d", "2", "--k", "3", "--n-max", "6"][..],
        &["verify", "--d", "3", "--k", "4", "--n-max", "5"][..],
        &["verify", "--d", "2", "--lambda", "[2,2];[3]", "--n-max", "5"][..],
    ] {
        let text = stdout(args);
        assert!(!text.is_empty());
        assert!(text.lines().all(|l| l.ends_with("MATCH") && !l.ends_with("MISMATCH")), "{args:?}\n{text}");
    }
}

#[test]
fn verify_csv_and_json_agree() {
    let base = ["verify", "--d", "3", "--k", "5", "--n-max", "6", "--include-zero"];
    let csv = stdout(&[&base[..], &["--format", "csv"]].concat());
    let json: Value = serde_json::from_str(&stdout(&[&base[..], &["--format", "json"]].concat())).unwrap();
    let mut reader = csv::Reader::from_reader(csv.as_bytes());
    let headers = reader.headers().unwrap().clone();
    assert_eq!(headers.iter().collect::<Vec<_>>(), ["n", "d", "target", "i", "formula", "oracle", "status"]);
    let records: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    let rows = json.as_array().unwrap();
    assert_eq!(records.len(), rows.len());
    for (rec, row) in records.iter().zip(rows) {
        for (h, v) in headers.iter().zip(rec.iter()) {
            let j = match &row[h] {
                Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            assert_eq!(v, j, "column {h}");
        }
    }
}

#[test]
fn bounds_examples() {
    assert_eq!(stdout(&["bounds", "--d", "2", "--k", "3", "--i", "3"]), "theorem: 6\nsharp: 6\n");
    assert_eq!(stdout(&["bounds", "--d", "2", "--lambda", "[2]", "--i", "4"]), "general: 16\n");
    assert_eq!(stdout(&["bounds", "--d", "4", "--k", "5", "--i", "0"]), "theorem: 0\nsharp: vacuous\n");
    let json: Value = serde_json::from_str(&stdout(&["bounds", "--d", "2", "--k", "8", "--i", "13", "--horizon", "9", "--format", "json"])).unwrap();
    assert_eq!(json["theorem"], serde_json::json!(["26", "104/5"]));
}

#[test]
fn exit_codes() {
    // usage errors
    assert_eq!(repstab(&["table", "--k", "3"]).status.code(), Some(1));
    assert_eq!(repstab(&["char", "--d", "2", "--k", "3", "--lambda", "[2]", "--i", "1", "--n", "3"]).status.code(), Some(1));
    assert_eq!(repstab(&["bounds", "--d", "2", "--k", "2", "--i", "1"]).status.code(), Some(1));
    assert_eq!(repstab(&["table", "--k", "3", "--i", "5..3"]).status.code(), Some(1));
    assert_eq!(repstab(&["table", "--k", "3", "--i", "3", "--horizon", "0"]).status.code(), Some(1));
    assert_eq!(repstab(&["char", "--d", "2", "--lambda", "[1,1]", "--i", "1", "--n", "3"]).status.code(), Some(1));
    // resource limit
    assert_eq!(repstab(&["verify", "--d", "2", "--k", "3", "--n-max", "8"]).status.code(), Some(3));
    assert_eq!(repstab(&["char", "--d", "2", "--lambda", "[2]", "--i", "1", "--n", "9"]).status.code(), Some(3));
    assert_eq!(repstab(&["--help"]).status.code(), Some(0));
}

#[test]
fn oracle_limit_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_repstab"))
        .args(["verify", "--d", "2", "--k", "3", "--n-max", "5"])
        .env("REPSTAB_ORACLE_LIMIT", "4")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    let out = repstab(&["verify", "--d", "2", "--k", "3", "--n-max", "5", "--oracle-limit", "4"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn progress_goes_to_stderr_and_output_to_file() {
    let dir = std::env::temp_dir().join(format!("repstab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("table.csv");
    let out = repstab(&["table", "--k", "3", "--i", "3", "--format", "csv", "--output", path.to_str().unwrap(), "--jobs", "2"]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("[table]"));
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "k,i,bound\n3,3,6\n");
    std::fs::remove_dir_all(&dir).unwrap();
}
