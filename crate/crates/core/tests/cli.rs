use std::fs;

use girth7::cli::run_with_io;
use girth7::families::gen_petersen;
use girth7::graph::{parse_graph6, write_graph6};
use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("girth7").chain(args.iter().copied());
    let code = run_with_io(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn construct_petersen_13_5() {
    let (code, out, _) = run(&["construct", "--family", "petersen", "--n", "13", "--k", "5"]);
    assert_eq!(code, 0);
    assert_eq!(
        parse_graph6(out.trim()).unwrap(),
        gen_petersen(13, 5).unwrap()
    );
}

#[test]
fn classify_file_as_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("in.g6");
    fs::write(&path, write_graph6(&gen_petersen(13, 5).unwrap())).unwrap();
    let (code, out, _) = run(&["classify", path.to_str().unwrap(), "--json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["case"], "petersen");
    assert_eq!(v["signature"], serde_json::json!([4, 5, 5]));
    assert_eq!(v["girth"], 7);
    assert_eq!(v["witness"]["n"], 13);
}

#[test]
fn domain_and_usage_errors() {
    let (code, out, err) = run(&["classify", "--family", "petersen"]);
    assert_eq!(code, 1);
    assert!(out.is_empty());
    assert!(err.contains("girth is 5"));

    assert_eq!(run(&["construct", "--family", "a"]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["verify", "no-such-suite"]).0, 2);
    assert_eq!(run(&["classify", "/nonexistent/file.g6"]).0, 1);
    assert_eq!(run(&["--help"]).0, 0);
}

#[test]
fn signature_lists() {
    let (_, candidates, _) = run(&["signatures", "--candidates"]);
    assert_eq!(candidates.lines().count(), 7);
    let (_, realizable, _) = run(&["signatures", "--realizable", "--json"]);
    let v: Vec<[usize; 3]> = serde_json::from_str(&realizable).unwrap();
    assert_eq!(
        v,
        vec![[0, 1, 1], [2, 2, 2], [4, 4, 4], [4, 4, 6], [4, 5, 5]]
    );
}

#[test]
fn verify_suites_pass() {
    for args in [
        &["verify", "cayley", "--i", "3"][..],
        &["verify", "condition"],
        &["verify", "coxeter"],
        &["verify", "cuts", "--graph", "coxeter", "--k", "4"],
    ] {
        let (code, out, _) = run(args);
        assert_eq!(code, 0, "{args:?}: {out}");
        assert!(out.lines().all(|l| l.starts_with("PASS")), "{out}");
    }
    let (code, out, _) = run(&["verify", "a-family", "--n", "9", "--json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["passed"], true);
}

#[test]
fn truncate_and_recover_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let trunc = dir.path().join("k77.g6");
    let (code, _, _) = run(&[
        "construct",
        "--family",
        "k77trunc",
        "--out",
        trunc.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let (code, doc, _) = run(&["recover", trunc.to_str().unwrap()]);
    assert_eq!(code, 0);
    let base = dir.path().join("base.json");
    fs::write(&base, &doc).unwrap();
    let (code, again, _) = run(&["truncate", base.to_str().unwrap()]);
    assert_eq!(code, 0);
    let again_path = dir.path().join("again.g6");
    fs::write(&again_path, &again).unwrap();
    let (code, out, _) = run(&[
        "isomorphic",
        trunc.to_str().unwrap(),
        again_path.to_str().unwrap(),
        "--json",
    ]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["isomorphic"], true);
}

#[test]
fn map_subcommands() {
    let dir = tempfile::tempdir().unwrap();
    let map = dir.path().join("klein.json");
    assert_eq!(
        run(&[
            "map",
            "build",
            "--family",
            "klein",
            "--out",
            map.to_str().unwrap()
        ])
        .0,
        0
    );
    let (code, out, _) = run(&["map", "check-rotary", map.to_str().unwrap(), "--json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["rotary"], true);
    let (_, out, _) = run(&["map", "euler", map.to_str().unwrap(), "--json"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["euler_characteristic"], -4);
    assert_eq!(v["type"], "{7,3}");
}

#[test]
fn output_is_deterministic_across_thread_counts() {
    let one = run(&["analyze", "--family", "coxeter", "--json", "--threads", "1"]);
    let four = run(&["analyze", "--family", "coxeter", "--json", "--threads", "4"]);
    assert_eq!(one, four);
    let cuts1 = run(&[
        "verify",
        "cuts",
        "--graph",
        "petersen-13-5",
        "--k",
        "4",
        "--threads",
        "1",
    ]);
    let cuts3 = run(&[
        "verify",
        "cuts",
        "--graph",
        "petersen-13-5",
        "--k",
        "4",
        "--threads",
        "3",
    ]);
    assert_eq!(cuts1, cuts3);
}
