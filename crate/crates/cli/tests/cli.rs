use std::path::PathBuf;
use std::process::{Command, Output};

use defcert_core::arrangement::{CASE_STUDY_ARRANGEMENT, CASE_STUDY_LOOPS};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_defcert")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("defcert-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn no_arguments_is_a_usage_error() {
    let o = run(&[]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("Usage"));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn every_subcommand_has_help() {
    for sub in ["verify-family", "zvk", "stallings", "certificate", "plot-delta"] {
        let o = run(&[sub, "--help"]);
        assert_eq!(o.status.code(), Some(0), "{sub}");
        assert!(stdout(&o).contains("Usage"), "{sub}");
    }
}

#[test]
fn stallings_membership() {
    let o = run(&["stallings", "--gens", "a a, b b, a b", "--query", "a"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("not a member"));
    assert!(out.contains("vertices 2, edges 4, rank 3, index 2"));
    let o = run(&["stallings", "--gens", "a a, b b, a b", "--query", "b a^-1"]);
    assert!(stdout(&o).contains("member: b a^-1 = "));
    let o = run(&["stallings", "--gens", "a a", "--query", "a^x"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn certificate_is_written_and_deterministic() {
    let (a, b) = (tmp("cert_a.txt"), tmp("cert_b.txt"));
    let o = run(&["certificate", "--n-max", "20", "--out", a.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("VERDICT PASS"));
    run(&["certificate", "--n-max", "20", "--out", b.to_str().unwrap()]);
    let text = std::fs::read_to_string(&a).unwrap();
    assert_eq!(text, std::fs::read_to_string(&b).unwrap());
    assert!(text.contains("21 cosets"));
    assert_eq!(run(&["certificate", "--n-max", "0", "--out", a.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(run(&["certificate", "--n-max", "3"]).status.code(), Some(2));
}

#[test]
fn zvk_on_files() {
    let (arr, lps) = (tmp("case.arr"), tmp("case.loops"));
    std::fs::write(&arr, CASE_STUDY_ARRANGEMENT).unwrap();
    std::fs::write(&lps, CASE_STUDY_LOOPS).unwrap();
    let o = run(&["zvk", "--arrangement", arr.to_str().unwrap(), "--loops", lps.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("fiber-generators: s1 c r2\nbase-generators: r s\n"));
    assert!(out.contains("rel r: s1 -> r2^-1 s1 c s1 c^-1 s1^-1 r2"));
    let missing = tmp("missing.arr");
    let o = run(&["zvk", "--arrangement", missing.to_str().unwrap(), "--loops", lps.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let bad = tmp("bad.arr");
    std::fs::write(&bad, "project x\nline a 0 0 1\n").unwrap();
    let o = run(&["zvk", "--arrangement", bad.to_str().unwrap(), "--loops", lps.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn verify_family_exit_codes() {
    let o = run(&["verify-family"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("PASS critical values: 121/96, inf"));
    assert_eq!(run(&["verify-family", "--at", "2,3"]).status.code(), Some(0));
    assert_eq!(run(&["verify-family", "--at", "-3/2,5"]).status.code(), Some(0));
    let o = run(&["verify-family", "--at", "1/3,2/3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("excluded curve y - 1 + x = 0"));
    assert_eq!(run(&["verify-family", "--at", "1"]).status.code(), Some(2));
}

#[test]
fn plot_delta_writes_svg() {
    let out = tmp("delta.svg");
    let o = run(&["plot-delta", "--window", "-2,3,-2,3", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let svg = std::fs::read_to_string(&out).unwrap();
    assert!(svg.starts_with("<svg"));
    assert_eq!(svg.matches(r#"class="curve""#).count(), 9);
    assert_eq!(run(&["plot-delta", "--window", "1,2", "--out", out.to_str().unwrap()]).status.code(), Some(2));
}
