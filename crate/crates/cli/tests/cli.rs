use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use gm_cli::{parse_manifold, print_manifold};
use gm_core::fixtures;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(format!("{name}.json"))
}

fn gmtool(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_gmtool"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    if let Some(text) = stdin {
        child.stdin.take().unwrap().write_all(text.as_bytes()).unwrap();
    }
    drop(child.stdin.take());
    child.wait_with_output().unwrap()
}

fn code(args: &[&str]) -> i32 {
    gmtool(args, None).status.code().unwrap()
}

fn path(name: &str) -> String {
    fixture(name).to_string_lossy().into_owned()
}

#[test]
fn checked_in_documents_are_canonical() {
    for (name, m) in [
        ("w1", fixtures::w1()),
        ("n2", fixtures::n2()),
        ("w1_delta3", fixtures::w1_delta3()),
        ("tri", fixtures::tri()),
        ("tri_flipped_cone", fixtures::tri_flipped_cone()),
        ("min", fixtures::min()),
        ("order_two", fixtures::order_two()),
    ] {
        let text = std::fs::read_to_string(fixture(name)).unwrap();
        assert_eq!(text, print_manifold(&m) + "\n", "{name}");
        assert_eq!(parse_manifold(&text).unwrap(), m);
    }
}

#[test]
fn compare_exit_codes() {
    let (w1, n2, d3) = (path("w1"), path("n2"), path("w1_delta3"));
    assert_eq!(code(&["--quiet", "compare", &w1, &n2]), 0);
    assert_eq!(code(&["--quiet", "compare", &w1, &w1]), 0);
    assert_eq!(code(&["--quiet", "compare", &w1, &d3]), 1);
    assert_eq!(code(&["--quiet", "compare", "--mode", "homeo", &w1, &n2]), 1);
    assert_eq!(code(&["--quiet", "compare", "--mode", "homeo", &n2, &n2]), 0);
}

#[test]
fn quiet_suppresses_stdout() {
    let out = gmtool(&["--quiet", "compare", &path("w1"), &path("n2")], None);
    assert!(out.stdout.is_empty());
    let out = gmtool(&["compare", &path("w1"), &path("n2")], None);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("\"kappa\": \"2 mod 5\""));
}

#[test]
fn genus_and_census_exit_codes() {
    assert_eq!(code(&["--quiet", "genus", &path("w1")]), 1);
    assert_eq!(code(&["--quiet", "genus", &path("tri")]), 0);
    assert_eq!(code(&["--quiet", "census", "--groups", "Z2,S3", &path("w1")]), 0);
    assert_eq!(code(&["--quiet", "--budget", "5", "census", &path("w1")]), 3);
    assert_eq!(code(&["--quiet", "census", "--groups", "M11", &path("w1")]), 2);
}

#[test]
fn input_errors() {
    let schema = r#"{"name":"t","vertices":[{"id":"x","kind":"major","genus":0,"orientable":true,"cones":[[2,1],[3,1]]}],
        "edges":[{"id":"e","from":"x","to":"x","matrix":[[1,1],[2,1]]},{"id":"e","from":"x","to":"x","matrix":[[1,1],[2,1]]}]}"#;
    let out = gmtool(&["info", "-"], Some(schema));
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("SCHEMA"));

    let invalid = r#"{"name":"t","vertices":[{"id":"x","kind":"major","genus":0,"orientable":true,"cones":[[2,1],[3,1]]}],
        "edges":[{"id":"e","from":"x","to":"x","matrix":[[2,1],[0,2]]}]}"#;
    let out = gmtool(&["info", "-"], Some(invalid));
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("INVALID") && err.contains("GAMMA_ZERO"), "{err}");

    let out = gmtool(&["validate", "-"], Some(invalid));
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("GAMMA_ZERO"));

    assert_eq!(gmtool(&["validate", "-"], Some("[1,")).status.code(), Some(2));
    assert_eq!(code(&["info", "/nonexistent/m.json"]), 2);
    assert_eq!(code(&["moves", &path("w1")]), 2);
    assert_eq!(code(&["moves", "--twist", "x:c9:e@from:1", &path("w1")]), 2);
}

#[test]
fn moves_round_trip_through_stdin() {
    let out = gmtool(&["moves", "--flip", "x", "--twist", "x:c0:e@from:2", "--mirror", &path("w1")], None);
    assert_eq!(out.status.code(), Some(0));
    let moved = String::from_utf8(out.stdout).unwrap();
    assert!(parse_manifold(&moved).is_ok());

    let file = tempfile::NamedTempFile::new().unwrap();
    std::fs::write(file.path(), &moved).unwrap();
    let moved_path = file.path().to_string_lossy().into_owned();
    assert_eq!(code(&["--quiet", "compare", "--mode", "homeo", &path("w1"), &moved_path]), 0);
    assert_eq!(code(&["--quiet", "compare", &moved_path, &path("n2")]), 0);
}

#[test]
fn presentation_output_parses() {
    let out = gmtool(&["presentation", &path("tri")], None);
    assert_eq!(out.status.code(), Some(0));
    let p = gm_cli::parse_presentation(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(p, gm_core::presentation::build_presentation(&fixtures::tri()));
}

#[test]
fn text_format_is_flat() {
    let out = gmtool(&["--format", "text", "info", "--prime", "5", &path("w1")], None);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l == "vertices.x.total_slope = 0/1"));
    assert!(text.lines().any(|l| l == "vertices.x.residually_p = true"));
}
