use std::process::{Command, Output};

use bergman::io::{
    check_examples, examples, parse_matroid, BergmanJson, ComplexJson, DecompositionJson,
    MatroidJson, SIX_ELEMENT,
};
use serde_json::Value;

fn bergman(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bergman"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn ok(args: &[&str]) -> Value {
    let out = bergman(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    stdout_json(&out)
}

#[test]
fn bergman_census_and_round_trip() {
    let v = ok(&["bergman", "--input", SIX_ELEMENT]);
    let parsed: BergmanJson = serde_json::from_value(v.clone()).unwrap();
    assert_eq!(parsed.facet_census.get(&3), Some(&20));
    assert_eq!(parsed.facet_census.get(&4), Some(&3));
    assert_eq!(parsed.vertices.len(), 9);
    assert_eq!(serde_json::to_value(&parsed).unwrap(), v);
}

#[test]
fn nested_set_output_round_trips() {
    let v = ok(&[
        "nested-set",
        "--input",
        SIX_ELEMENT,
        "--building-set",
        "minimal",
    ]);
    let parsed: ComplexJson = serde_json::from_value(v.clone()).unwrap();
    assert_eq!(parsed.maximal.len(), 26);
    assert!(parsed.maximal.iter().all(|&i| parsed.faces[i].len() == 3));
    assert_eq!(serde_json::to_value(&parsed).unwrap(), v);

    let explicit = ok(&[
        "nested-set",
        "--input",
        SIX_ELEMENT,
        "--building-set",
        "1;2;3;4;5;6;1234;1256;3456;123456",
    ]);
    assert_eq!(explicit, v);
    let maximal = ok(&[
        "nested-set",
        "--input",
        SIX_ELEMENT,
        "--building-set",
        "maximal",
    ]);
    assert_eq!(maximal, ok(&["order-complex", "--input", SIX_ELEMENT]));
}

#[test]
fn decomposition_matches_the_worked_example() {
    let v = ok(&[
        "decompose",
        "--input",
        SIX_ELEMENT,
        "--gamma",
        "1;2;1234;1256",
    ]);
    let parsed: DecompositionJson = serde_json::from_value(v.clone()).unwrap();
    assert_eq!(
        parsed.partition,
        vec![vec![1], vec![2], vec![3, 4], vec![5, 6]]
    );
    let bounds: Vec<(Vec<usize>, Vec<usize>)> = parsed
        .summands
        .iter()
        .map(|s| (s.lower.clone(), s.upper.clone()))
        .collect();
    assert_eq!(
        bounds,
        vec![
            (vec![], vec![1]),
            (vec![], vec![2]),
            (vec![1, 2], vec![1, 2, 3, 4]),
            (vec![1, 2], vec![1, 2, 5, 6]),
        ]
    );
    let bracketed = ok(&[
        "decompose",
        "--input",
        SIX_ELEMENT,
        "--gamma",
        "[1];[2];[1,2,3,4];[1,2,5,6]",
    ]);
    assert_eq!(bracketed, v);
}

#[test]
fn type_from_weights_and_from_flats_agree() {
    let a = ok(&["type", "--input", SIX_ELEMENT, "--weights", "3,3,1,1,1,1"]);
    let b = ok(&["type", "--input", SIX_ELEMENT, "--gamma", "1;2;1234;1256"]);
    assert_eq!(a, b);
    assert_eq!(a["bases"].as_array().unwrap().len(), 4);
}

#[test]
fn output_is_independent_of_thread_count() {
    for verb in ["bergman", "audit", "order-complex"] {
        let one = bergman(&[verb, "--input", SIX_ELEMENT, "--threads", "1"]);
        let many = bergman(&[verb, "--input", SIX_ELEMENT, "--threads", "4"]);
        assert!(one.status.success() && many.status.success());
        assert_eq!(one.stdout, many.stdout, "{verb}");
    }
}

#[test]
fn examples_are_stable() {
    let first = bergman(&["examples"]);
    let second = bergman(&["examples"]);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
    assert!(check_examples().is_ok());
    for (name, fresh, golden) in examples() {
        assert_eq!(fresh, golden, "{name}");
    }
}

#[test]
fn output_flag_writes_a_file() {
    let dir = std::env::temp_dir().join(format!("bergman-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("flats.json");
    let out = bergman(&[
        "flats",
        "--input",
        SIX_ELEMENT,
        "--output",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let written: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(written["flats"].as_array().unwrap().len(), 34);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn matroid_json_round_trips() {
    for text in [
        SIX_ELEMENT,
        r#"{"uniform": [3, 5]}"#,
        r#"{"graphic": {"vertices": 4, "edges": [[1,2],[1,3],[1,4],[2,3],[2,4],[3,4]]}}"#,
    ] {
        let m = parse_matroid(text).unwrap();
        let emitted = serde_json::to_string(&MatroidJson::from_matroid(&m)).unwrap();
        let reparsed: MatroidJson = serde_json::from_str(&emitted).unwrap();
        assert_eq!(reparsed, MatroidJson::from_matroid(&m));
        assert_eq!(parse_matroid(&emitted).unwrap(), m);
    }
}

#[test]
fn validation_errors_exit_1_with_a_witness() {
    let out = bergman(&["flats", "--input", r#"{"n": 4, "bases": [[1,2],[3,4]]}"#]);
    assert_eq!(out.status.code(), Some(1));
    let v = stdout_json(&out);
    assert_eq!(v["error"], "ExchangeAxiomViolated");
    assert_eq!(v["witness"], serde_json::json!([[1, 2], [3, 4], [1]]));

    let out = bergman(&["flacets", "--input", r#"{"n": 2, "bases": [[1,2]]}"#]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout_json(&out)["error"], "NotConnected");

    let out = bergman(&["decompose", "--input", SIX_ELEMENT, "--gamma", "123"]);
    assert_eq!(stdout_json(&out)["error"], "NotAFlat");

    let out = bergman(&["frobnicate", "--input", SIX_ELEMENT]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout_json(&out)["error"], "UsageError");
}

#[test]
fn io_errors_exit_2() {
    let out = bergman(&["flats", "--input", "/nonexistent/matroid.json"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(stdout_json(&out)["error"], "Io");
}
