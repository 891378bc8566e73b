use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn seor(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_seor")).args(args).output().expect("spawn seor")
}

fn seor_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_seor"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn seor");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

#[test]
fn bracket_example() {
    let o = seor(&["bracket", "--alg", "S", "--x", "L:2", "--y", "L:-2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o).trim(),
        r#"{"result":[{"coeff":"-4","gen":"L","mode":0},{"coeff":"1/2","gen":"C1","mode":0}]}"#
    );
}

#[test]
fn bracket_half_integer_modes() {
    let o = seor(&["bracket", "--alg", "S", "--x", "L:1", "--y", "G:-1/2"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["result"][0]["gen"], "G");
    assert_eq!(v["result"][0]["mode"], "1/2");
    assert_eq!(v["result"][0]["coeff"], "-1/2");
}

#[test]
fn bracket_linear_combination() {
    let o = seor(&["bracket", "--alg", "S", "--x", "2*L:1 + L:-1", "--y", "W:0"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let terms = v["result"].as_array().unwrap();
    assert_eq!(terms.len(), 2);
}

#[test]
fn h2_example() {
    let o = seor(&["h2", "--epsilon", "0", "--window", "8"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["dimension"], 4);
    assert_eq!(v["window"], 8);
    assert_eq!(v["basis"].as_array().unwrap().len(), 4);
}

#[test]
fn h2_half_with_explicit_cocycles() {
    let o = seor(&["h2", "--epsilon", "12", "--window", "6", "--explicit"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["dimension"], 2);
    assert_eq!(v["independent"], true);
}

#[test]
fn verma_dims_example() {
    let o = seor(&["verma", "--h1", "0", "--h2", "0", "--c1", "0", "--max-level", "2", "--dims"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "[1,1,2,3,6]");
}

#[test]
fn checks_pass() {
    for args in [
        &["jacobi-check", "--alg", "S", "--window", "3"][..],
        &["jacobi-check", "--alg", "Stilde12", "--window", "3"],
        &["annihilation", "--alg", "S", "--window", "3", "--table"],
        &["annihilation", "--alg", "NS", "--window", "3"],
        &["phi-check", "--window", "3"],
        &["derived-series", "--d", "1", "--t", "2"],
    ] {
        let o = seor(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stdout(&o));
    }
}

#[test]
fn derived_series_of_q00() {
    let v = json(&seor(&["derived-series", "--d", "0", "--t", "0"]));
    assert_eq!(v["dims"], serde_json::json!([4, 1, 0]));
}

#[test]
fn whittaker_pipeline() {
    let base = ["--psi", "W:1=1", "--psi", "L:2=1"];
    let o = seor(&[&["whittaker"][..], &base].concat());
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert_eq!(json(&o)["certified"], true);

    let o = seor(&[&["claim1", "--word", "L:-1,W:-1"][..], &base].concat());
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert!(!v["steps"].as_array().unwrap().is_empty());

    let o = seor(&[&["claim1", "--samples", "4"][..], &base].concat());
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["report"]["passed"], true);

    let o = seor(&[&["top-space"][..], &base].concat());
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["equals_coefficient_space"], true);

    let o = seor(&[&["restricted-probe", "--word", "L:-1"][..], &base].concat());
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["results"][0]["tail_zero"], true);
}

#[test]
fn singular_vector_in_verma() {
    let o = seor(&["singular", "--h1", "1", "--level", "1/2"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["dimension"], 1);
    assert_eq!(v["proper"], true);
}

#[test]
fn induce_from_file_and_stdin() {
    let dir = std::env::temp_dir().join(format!("seor-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("v.json");
    std::fs::write(&path, r#"{"dim":1,"actions":{"L:0":[["1/2"]]}}"#).unwrap();
    let o = seor(&["induce", "--module", path.to_str().unwrap(), "--d", "0", "--t", "0"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let v = json(&o);
    assert_eq!(v["validation"]["passed"], true);
    assert_eq!(v["certified"], false);
    std::fs::remove_dir_all(&dir).ok();

    let o = seor_stdin(&["induce", "--module", "-", "--d", "1", "--t", "1"], r#"{"dim":1}"#);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn invalid_module_is_a_math_failure() {
    let o = seor_stdin(&["induce", "--module", "-", "--d", "0", "--t", "0"], r#"{"dim":1,"c2":"1"}"#);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)["validation"]["passed"], false);
}

#[test]
fn malformed_json_exits_2_with_location() {
    let o = seor_stdin(&["induce", "--module", "-", "--d", "0", "--t", "0"], "{\"dim\":1,\n \"actions\": [}");
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("line 2"), "{err}");
}

#[test]
fn schema_errors_name_the_path() {
    let o = seor_stdin(&["induce", "--module", "-", "--d", "0", "--t", "0"], r#"{"dim":1,"parities":["up"]}"#);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8(o.stderr).unwrap().contains("$.parities[0]"));
}

#[test]
fn input_errors_exit_2() {
    for args in [
        &["bracket", "--alg", "Q", "--x", "L:1", "--y", "L:1"][..],
        &["bracket", "--alg", "S", "--x", "L:1/2", "--y", "L:1"],
        &["bracket", "--alg", "S", "--x", "L:1", "--y", "L:1", "--bogus"],
        &["jacobi-check", "--alg", "S", "--window", "0"],
        &["whittaker"],
        &["claim1", "--kind", "verma", "--samples", "2"],
        &["verma", "--c2", "1", "--dims"],
    ] {
        assert_eq!(seor(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["restricted-probe", "--kind", "verma", "--samples", "3", "--seed", "7"];
    let a = seor(&args);
    let b = seor(&args);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json(&a)["seed"], 7);
    let c = seor(&["restricted-probe", "--kind", "verma", "--samples", "3", "--seed", "8"]);
    assert_eq!(json(&c)["seed"], 8);
}

#[test]
fn text_format() {
    let o = seor(&["--format", "text", "derived-series", "--d", "0", "--t", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("dims: [4,1,0]"));
}
