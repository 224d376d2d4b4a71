use std::process::Command;

use linksym::cli::{MacdonaldJson, NablaJson, RoutesJson, VerifyJson};
use linksym::qt_arith::emit::rational_from_json;
use linksym::symfunc::SymFunc;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_linksym")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

#[test]
fn fv_all_routes_agree() {
    let (code, out, _) = run(&["fv", "0101", "--method", "all"]);
    assert_eq!(code, 0);
    assert!(out.contains("[recurrence]"));
    assert!(out.trim_end().ends_with("AGREE"));
}

#[test]
fn fv_json_round_trips() {
    let (code, out, _) = run(&["--format", "json", "fv", "011", "--method", "all", "--order", "4"]);
    assert_eq!(code, 0);
    let parsed: RoutesJson = serde_json::from_str(&out).unwrap();
    assert_eq!(parsed.verdict, "AGREE");
    assert_eq!(parsed.truncated_order, 4);
    let values: Vec<_> = parsed.routes.iter().map(|r| rational_from_json(&r.value).unwrap()).collect();
    assert!(values.windows(2).all(|w| w[0] == w[1]));
}

#[test]
fn linksym_plain_and_normalized() {
    let (_, out, _) = run(&["linksym", "11"]);
    assert_eq!(out.trim(), "m[2] + (1 + t)*m[1,1]");
    let (_, out, _) = run(&["--format", "json", "linksym", "00", "--normalized"]);
    let j = serde_json::from_str(&out).unwrap();
    let f = SymFunc::from_json(&j).unwrap();
    assert_eq!(f.degree(), 2);
}

#[test]
fn fubini_counts() {
    let (_, out, _) = run(&["fubini", "000"]);
    assert!(out.trim_end().ends_with("7 words"));
}

#[test]
fn macdonald_json() {
    let (code, out, _) = run(&["--format", "json", "macdonald", "4,3,1"]);
    assert_eq!(code, 0);
    let j: MacdonaldJson = serde_json::from_str(&out).unwrap();
    assert_eq!(j.cells.len(), 8);
    assert_eq!(j.t_mu, "q^9*t^5");
}

#[test]
fn nabla_p1n_passes() {
    let (code, out, _) = run(&["--format", "json", "nabla-p1n", "3"]);
    assert_eq!(code, 0);
    let j: NablaJson = serde_json::from_str(&out).unwrap();
    assert_eq!(j.nabla, j.l_tilde);
}

#[test]
fn latex_output() {
    let (_, out, _) = run(&["--format", "latex", "linksym", "0"]);
    assert!(out.contains("\\frac"));
}

#[test]
fn verify_strict_exit_codes() {
    let (code, out, _) = run(&["verify", "conj43", "--max-n", "3", "--strict"]);
    assert_eq!(code, 0, "{out}");
    let (code, out, _) = run(&["--format", "json", "verify", "bergeron", "--max-n", "3", "--strict"]);
    assert_eq!(code, 1);
    let j: VerifyJson = serde_json::from_str(&out).unwrap();
    assert!(j.summary.failed > 0);
    assert!(j.reports.iter().filter(|r| r.verdict == linksym::conjectures::Verdict::Fail).all(|r| r.id == "B5"));
    let (code, _, _) = run(&["verify", "bergeron", "--max-n", "3"]);
    assert_eq!(code, 0);
}

#[test]
fn size_limit_and_override() {
    let (code, _, err) = run(&["fv", "0000000"]);
    assert_eq!(code, 2);
    assert!(!err.is_empty());
    let (code, _, _) = run(&["--unsafe-max", "7", "fubini", "0000000"]);
    assert_eq!(code, 0);
}

#[test]
fn bad_input_is_an_error() {
    let (code, _, _) = run(&["fv", "012"]);
    assert_ne!(code, 0);
    let (code, _, _) = run(&["macdonald", "1,2"]);
    assert_ne!(code, 0);
}
