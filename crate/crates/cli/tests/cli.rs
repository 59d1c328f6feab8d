use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Stdio};

use levelable::{
    decide_levelable, generate_family, parse_graph, validate_weights, verify_certificate,
    FamilySpec, LevelCertificate,
};
use serde_json::Value;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn run_with(args: &[&str], stdin: Option<&str>, env: &[(&str, &str)]) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_levelable"));
    cmd.args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .env_remove("LEVELABLE_MAX_SETS");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().expect("binary runs");
    {
        let mut pipe = child.stdin.take().unwrap();
        if let Some(text) = stdin {
            // The process may exit before reading its input.
            let _ = pipe.write_all(text.as_bytes());
        }
    }
    let out = child.wait_with_output().unwrap();
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn run(args: &[&str]) -> Run {
    run_with(args, None, &[])
}

fn ok_json(args: &[&str], schema: &str) -> Value {
    let r = run(args);
    assert_eq!(r.code, 0, "{args:?}: {}", r.stderr);
    let v: Value = serde_json::from_str(r.stdout.trim()).unwrap();
    assert_valid(schema, &v);
    v
}

fn assert_valid(schema: &str, v: &Value) {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("schemas")
        .join(format!("{schema}.schema.json"));
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    let validator = jsonschema::validator_for(&schema).expect("schema compiles");
    let errors: Vec<String> = validator.iter_errors(v).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{v} fails {errors:?}");
}

fn write_graph(name: &str, text: &str) -> PathBuf {
    let path = Path::new(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn gen(spec: &str) -> String {
    let args: Vec<&str> = std::iter::once("gen")
        .chain(spec.split_whitespace())
        .collect();
    let r = run(&args);
    assert_eq!(r.code, 0, "{}", r.stderr);
    r.stdout
}

fn graph_file(name: &str, spec: &str) -> String {
    write_graph(name, &gen(spec)).to_string_lossy().into_owned()
}

#[test]
fn decide_p5_is_not_levelable() {
    let p5 = graph_file("p5.edges", "path 5");
    let v = ok_json(&["decide", &p5], "certificate");
    assert_eq!(v["verdict"], "not_levelable");
    let cert: LevelCertificate = serde_json::from_value(v).unwrap();
    let g = parse_graph(&gen("path 5")).unwrap();
    assert!(verify_certificate(&g, &cert).unwrap());
}

#[test]
fn generated_cycle_piped_into_decide() {
    let r = run_with(&["decide", "-"], Some(&gen("cycle 7")), &[]);
    assert_eq!(r.code, 0);
    let v: Value = serde_json::from_str(&r.stdout).unwrap();
    assert_valid("certificate", &v);
    assert_eq!(v["verdict"], "levelable");
    let weights: Vec<u64> = serde_json::from_value(v["weights"].clone()).unwrap();
    assert_eq!(weights, vec![1; 7]);
    assert!(validate_weights(
        &generate_family(&FamilySpec::Cycle { n: 7 }).unwrap(),
        &weights
    )
    .is_ok());
}

#[test]
fn socle_of_k2() {
    let k2 = write_graph("k2.edges", "2 1\n0 1\n");
    let v = ok_json(
        &["socle", k2.to_str().unwrap(), "--exponents", "2,2"],
        "socle",
    );
    assert_eq!(v["socle"], serde_json::json!([0, 2]));
    assert_eq!(v["level"], true);
    let v = ok_json(
        &["socle", k2.to_str().unwrap(), "--exponents", "2,3"],
        "socle",
    );
    assert_eq!(v["socle"], serde_json::json!([0, 1, 1]));
    assert_eq!(v["level"], false);
}

#[test]
fn gen_then_decide_matches_in_process_verdicts() {
    let specs = [
        "path 2",
        "path 6",
        "cycle 5",
        "cycle 6",
        "star 4",
        "multipartite 2,3",
        "circulant 10 2,5",
        "cubic-circulant 6 2",
        "caterpillar 1,0,1",
        "caterpillar 2,1,1",
        "bigstar 1,2,2,3",
        "bigstar 1,2,2",
        "gnp 9 0.5 3",
        "cameron-walker 3 2 0-0,1-0,1-1,2-1 1,1,1 1,0",
    ];
    for spec in specs {
        let text = gen(spec);
        let r = run_with(&["decide", "-"], Some(&text), &[]);
        assert_eq!(r.code, 0, "{spec}: {}", r.stderr);
        let v: Value = serde_json::from_str(&r.stdout).unwrap();
        assert_valid("certificate", &v);
        let family: FamilySpec = spec.parse().unwrap();
        let expected = decide_levelable(&generate_family(&family).unwrap()).unwrap();
        assert_eq!(
            v["verdict"] == "levelable",
            expected.is_levelable(),
            "verdict mismatch for {spec}"
        );
        assert_eq!(parse_graph(&text).unwrap().to_edge_list(), text);
    }
}

#[test]
fn mis_and_wcw_outputs() {
    let p5 = graph_file("p5-mis.edges", "path 5");
    let v = ok_json(&["mis", &p5], "mis");
    assert_eq!(
        v["sets"],
        serde_json::json!([[0, 2, 4], [0, 3], [1, 3], [1, 4]])
    );
    assert_eq!(v["well_covered"], false);
    let v = ok_json(&["wcw", &p5], "wcw");
    assert_eq!(v["dim"], 2);
    let k2 = graph_file("k2-wcw.edges", "path 2");
    let v = ok_json(&["wcw", &k2], "wcw");
    assert_eq!(v["basis"], serde_json::json!([["1", "1"]]));
}

#[test]
fn classify_file_and_family() {
    let c6 = graph_file("c6.edges", "cycle 6");
    let v = ok_json(&["classify", &c6], "family_verdict");
    assert_eq!(
        (v["family"].as_str(), v["levelable"].as_bool()),
        (Some("cycle"), Some(false))
    );
    let v = ok_json(
        &["classify", "--family", "bigstar 1,2,2,3"],
        "family_verdict",
    );
    assert_eq!(v["levelable"], false);
    let v = ok_json(
        &["classify", "--family", "cubic-circulant 5 2"],
        "family_verdict",
    );
    assert_eq!(
        (v["family"].as_str(), v["levelable"].as_bool()),
        (Some("cubic_circulant"), Some(true))
    );
    let v = ok_json(
        &["classify", "--family", "cameron-walker 1 1 0-0 2 1"],
        "family_verdict",
    );
    assert_eq!(
        v["weights"]["weights"],
        serde_json::json!([2, 1, 1, 1, 1, 1])
    );
}

#[test]
fn constructions() {
    let c5 = graph_file("c5.edges", "cycle 5");
    let v = ok_json(
        &[
            "construct",
            "duplicate",
            &c5,
            "--vertex",
            "4",
            "--weights",
            "1,1,1,1,1",
        ],
        "construction",
    );
    assert_eq!(
        v["weights"]["weights"],
        serde_json::json!([2, 2, 2, 2, 1, 1])
    );
    let p3 = graph_file("p3.edges", "path 3");
    let v = ok_json(
        &["construct", "expand", &p3, "--vertex", "1"],
        "construction",
    );
    assert_eq!(v["weights"]["weights"], serde_json::json!([1, 2, 1, 2]));
    let p2 = graph_file("p2.edges", "path 2");
    let k3 = graph_file("k3.edges", "multipartite 1,1,1");
    let v = ok_json(
        &[
            "construct",
            "attach",
            &p2,
            &p2,
            &k3,
            "--weights",
            "1,1",
            "--weights",
            "1,1,1",
        ],
        "construction",
    );
    assert_eq!(v["graph"]["n"], 7);
    let v = ok_json(
        &["construct", "profile", "--pendants", "2,3"],
        "construction",
    );
    assert_eq!(
        v["weights"]["weights"],
        serde_json::json!([2, 3, 1, 1, 1, 1, 1])
    );
    let v = ok_json(
        &["construct", "profile", "--cliques", "1:2,1:2"],
        "construction",
    );
    assert_eq!(v["graph"]["n"], 4);

    let p5 = graph_file("p5-attach.edges", "path 5");
    let r = run(&["construct", "attach", &p2, &p5, &p2]);
    assert_eq!(r.code, 1);
    assert_valid("error", &serde_json::from_str(r.stderr.trim()).unwrap());
}

#[test]
fn stats_is_reproducible() {
    let args = [
        "stats", "--n", "8", "--p", "0.5", "--trials", "30", "--seed", "7",
    ];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.code, 0);
    assert_eq!(a.stdout, b.stdout);
    let mut lines = a.stdout.lines();
    assert_eq!(lines.next(), Some("trial,n,p,seed,dim,levelable"));
    assert_eq!(lines.count(), 30);
    let v = ok_json(
        &["stats", "--n", "4", "--trials", "0", "--format", "json"],
        "stats",
    );
    assert_eq!(v["trials"].as_array().unwrap().len(), 64);
}

#[test]
fn domain_errors_exit_one_with_json() {
    let bad = write_graph("bad.edges", "3 1\n0 5\n");
    for args in [
        vec!["decide", bad.to_str().unwrap()],
        vec!["decide", "/nonexistent/graph.edges"],
        vec!["gen", "path", "1"],
        vec!["socle", bad.to_str().unwrap(), "--exponents", "2,2,2"],
        vec!["stats", "--n", "9", "--trials", "0"],
    ] {
        let r = run(&args);
        assert_eq!(r.code, 1, "{args:?}");
        assert!(r.stdout.is_empty());
        assert_valid("error", &serde_json::from_str(r.stderr.trim()).unwrap());
    }
    let k2 = write_graph("k2-exp.edges", "2 1\n0 1\n");
    let r = run(&["socle", k2.to_str().unwrap(), "--exponents", "2,1"]);
    assert_eq!(r.code, 1);
    let e: Value = serde_json::from_str(r.stderr.trim()).unwrap();
    assert_eq!(e["error"], "invalid_exponent");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&[]).code, 2);
    assert_eq!(run(&["decide"]).code, 2);
    assert_eq!(run(&["frobnicate"]).code, 2);
    assert_eq!(run(&["classify"]).code, 2);
    assert_eq!(run(&["construct", "profile"]).code, 2);
    assert_eq!(run(&["stats", "--n", "x"]).code, 2);
    let r = run_with(
        &["decide", "-"],
        Some("1 0\n"),
        &[("LEVELABLE_MAX_SETS", "zero")],
    );
    assert_eq!(r.code, 2);
}

#[test]
fn max_sets_override() {
    let c7 = gen("cycle 7");
    let r = run_with(&["decide", "-"], Some(&c7), &[("LEVELABLE_MAX_SETS", "3")]);
    assert_eq!(r.code, 1);
    let e: Value = serde_json::from_str(r.stderr.trim()).unwrap();
    assert_eq!(e["error"], "too_many_sets");
    let r = run_with(
        &["decide", "-"],
        Some(&c7),
        &[("LEVELABLE_MAX_SETS", "100")],
    );
    assert_eq!(r.code, 0);
}
