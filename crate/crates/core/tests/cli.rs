use std::io::Write;

use diagforge::cli::{run, EXIT_OK, EXIT_REJECTED, EXIT_USAGE};
use serde_json::Value;

fn call(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (vec![], vec![]);
    let argv = std::iter::once("diagforge").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn records(text: &str) -> Vec<Value> {
    text.lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

#[test]
fn list_shows_every_family() {
    let (code, out, _) = call(&["list"]);
    assert_eq!(code, EXIT_OK);
    let recs = records(&out);
    assert_eq!(recs.len(), diagforge::families::FAMILIES.len());
    assert!(out.contains("sec3_St"));
}

#[test]
fn gen_writes_verified_points_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("pts.jsonl");
    let (code, out, _) = call(&[
        "gen",
        "--family",
        "sec3_St",
        "--param",
        "u=1",
        "--multiples",
        "1..3",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, EXIT_OK);
    assert!(out.is_empty());
    let recs = records(&std::fs::read_to_string(&path).unwrap());
    assert_eq!(recs.len(), 3);
    assert_eq!(recs[0]["point"], serde_json::json!(["0", "2", "1", "-1"]));
    assert!(recs.iter().all(|r| r["verified"] == true));
}

#[test]
fn gen_rejects_bad_input() {
    assert_eq!(call(&["gen", "--family", "nosuch"]).0, EXIT_USAGE);
    assert_eq!(
        call(&["gen", "--family", "v1_ex1", "--param", "u=0"]).0,
        EXIT_USAGE
    );
    assert_eq!(
        call(&["gen", "--family", "v1_ex1", "--param", "u"]).0,
        EXIT_USAGE
    );
}

#[test]
fn check_exit_codes() {
    let ok = call(&["check", "--surface", "1,1,-2,-14", "--point", "0,2,1,-1"]);
    assert_eq!(ok.0, EXIT_OK);
    let bad = call(&["check", "--surface", "1,1,1,1", "--point", "1,1,1,1"]);
    assert_eq!(bad.0, EXIT_REJECTED);
    let sextic = call(&[
        "check",
        "--surface",
        "1,1,-36,2",
        "--exponents",
        "6,6,6,3",
        "--point",
        "37,17,21,629",
    ]);
    assert_eq!(sextic.0, EXIT_OK);
    assert_eq!(
        call(&["check", "--surface", "1,1,1", "--point", "1,1,1,1"]).0,
        EXIT_USAGE
    );
    assert_eq!(
        call(&["check", "--surface", "1,1,1,1", "--point", "0,0,0,0"]).0,
        EXIT_USAGE
    );
}

#[test]
fn search_is_independent_of_threads() {
    let a = call(&[
        "search",
        "--surface",
        "1,1,-2,-14",
        "--height",
        "4",
        "--threads",
        "1",
    ]);
    let b = call(&[
        "search",
        "--surface",
        "1,1,-2,-14",
        "--height",
        "4",
        "--threads",
        "8",
    ]);
    assert_eq!(a.0, EXIT_OK);
    assert_eq!(a.1, b.1);
    assert!(a.1.contains(r#"["0","2","1","1"]"#));
    assert_eq!(
        call(&["search", "--surface", "1,1,1,2", "--height", "0"]).0,
        EXIT_USAGE
    );
}

#[test]
fn chain_header_and_members() {
    let (code, out, _) = call(&["chain", "--t0", "1", "--length", "2"]);
    assert_eq!(code, EXIT_OK);
    let recs = records(&out);
    assert_eq!(recs[0]["kind"], "header");
    assert_eq!(recs[0]["k"], "11");
    assert_eq!(recs.len(), 3);
    assert_eq!(recs[1]["point"], serde_json::json!(["3", "2", "-1", "-1"]));
}

#[test]
fn identities_from_an_override_file() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(
        f,
        "id: square\nlhs: (^ (+ x 1) 2)\nrhs: (+ (^ x 2) (* 2 x) 1)"
    )
    .unwrap();
    writeln!(f, "id: wrong\nlhs: (^ (+ x 1) 2)\nrhs: (+ (^ x 2) 1)").unwrap();
    std::env::set_var(diagforge::verify::FIXTURES_ENV, f.path());
    let pass = call(&["verify-identities", "--id", "square"]);
    let fail = call(&["verify-identities", "--id", "wrong"]);
    let unknown = call(&["verify-identities", "--id", "nosuch"]);
    std::env::remove_var(diagforge::verify::FIXTURES_ENV);
    assert_eq!(pass.0, EXIT_OK);
    assert_eq!(fail.0, EXIT_REJECTED);
    assert_eq!(unknown.0, EXIT_USAGE);
}

#[test]
fn help_and_unknown_commands() {
    assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(call(&["--help"]).0, EXIT_OK);
}
