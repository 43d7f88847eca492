use std::io::Write;
use std::process::{Command, Output, Stdio};

fn equivol(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_equivol"))
        .args(args)
        .env("EQUIVOL_NO_COLOR", "1")
        .output()
        .expect("spawn equivol")
}

fn equivol_stdin(args: &[&str], input: &[u8]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_equivol"))
        .args(args)
        .env("EQUIVOL_NO_COLOR", "1")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn equivol");
    child.stdin.take().unwrap().write_all(input).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const CUBE: &str = r#"{"faces":[[0,1,2,3],[4,7,6,5],[0,4,5,1],[1,5,6,2],[2,6,7,3],[3,7,4,0]]}"#;
const OCTAHEDRON: &str =
    r#"{"faces":[[0,1,2],[0,2,3],[0,3,4],[0,4,1],[5,2,1],[5,3,2],[5,4,3],[5,1,4]]}"#;

#[test]
fn lobachevsky_prints_fifteen_digits() {
    let o = equivol(&["lobachevsky", "pi/6"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "0.507470803204827");
    let o = equivol(&["lobachevsky", "-pi/6"]);
    assert_eq!(stdout(&o).trim(), "-0.507470803204827");
}

#[test]
fn check_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let cube = dir.path().join("cube.json");
    std::fs::write(&cube, CUBE).unwrap();
    let o = equivol(&["check", "--kind", "pi2", cube.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(report["realizable"], false);

    let o = equivol(&["check", "--kind", "pi3", cube.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn check_reads_stdin() {
    let o = equivol_stdin(&["check", "--kind", "pi2", "-"], OCTAHEDRON.as_bytes());
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn malformed_input_is_one_line_exit_one() {
    let o = equivol_stdin(&["check", "--kind", "pi2", "-"], b"{\"faces\": [[0,1]]}");
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8(o.stderr).unwrap();
    assert_eq!(err.trim_end().lines().count(), 1, "{err}");

    let o = equivol(&["check", "--kind", "pi7", "-"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(String::from_utf8(o.stderr).unwrap().trim_end().lines().count(), 1);

    let o = equivol(&["check", "--kind", "pi2", "/nonexistent/file.json"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn bounds_for_octahedron_are_a_point() {
    let o = equivol_stdin(&["bounds", "--kind", "pi2", "-"], OCTAHEDRON.as_bytes());
    assert!(o.status.success());
    let b: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(b["lower"]["value"].as_f64(), Some(3.66386237671));
    assert_eq!(b["upper"]["value"].as_f64(), Some(3.66386237671));
}

#[test]
fn family_planar_code_feeds_census() {
    let dir = tempfile::tempdir().unwrap();
    let pc = dir.path().join("glue.pc");
    let jsonl = dir.path().join("glue.jsonl");
    let csv = dir.path().join("glue.csv");
    let o = equivol(&["family", "--name", "octglue", "--param", "3", "--emit", "planar_code", "--output", pc.to_str().unwrap()]);
    assert!(o.status.success());
    let o = equivol(&[
        "census",
        "--kind",
        "pi2",
        "--jobs",
        "2",
        "--output",
        jsonl.to_str().unwrap(),
        "--csv",
        csv.to_str().unwrap(),
        pc.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(&jsonl).unwrap();
    let rec: serde_json::Value = serde_json::from_str(text.lines().next().unwrap()).unwrap();
    assert_eq!(rec["n"], 12);
    assert_eq!(rec["realizable"], true);
    assert!(std::fs::read_to_string(&csv).unwrap().starts_with("id,"));

    let o = equivol(&["census", "--kind", "pi2", "--max-volume", "3", pc.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
}

#[test]
fn family_faces_round_trips_through_check() {
    let o = equivol(&["family", "--name", "q2k", "--param", "2"]);
    assert!(o.status.success());
    let c = equivol_stdin(&["check", "--kind", "pi3", "-"], &o.stdout);
    assert_eq!(c.status.code(), Some(0));
}

#[test]
fn family_report_has_rows() {
    let o = equivol(&["family", "--name", "p2k", "--report", "3", "5"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 4);
    let o = equivol(&["family", "--name", "p2k", "--param", "1"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn invert_bound_matches_library() {
    let o = equivol(&["invert-bound", "--kind", "ideal_pi2", "--volume", "3.66386"]);
    assert!(o.status.success());
    let n: usize = stdout(&o).trim().parse().unwrap();
    let lib = equivol_core::bounds::max_vertices_for_volume(3.66386, "ideal_pi2".parse().unwrap()).unwrap();
    assert_eq!(n, lib);
}
