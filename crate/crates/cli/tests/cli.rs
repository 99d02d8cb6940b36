use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::NamedTempFile;

fn session(text: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn burch(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_burch")).args(args).output().unwrap()
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let out = burch(&all);
    let v = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap(), v)
}

const TWO: &str = "\
ring 32003 x y
# monomial examples
ideal Stair = x^4, x^2*y^2, y^4
ideal Square = x^2, x*y, y^2
ideal Line = x, y^2
ideal Plane = x
module L = cyclic Line
module F = free 2
";

#[test]
fn check_verdicts() {
    let f = session(TWO);
    let p = f.path().to_str().unwrap();
    let (code, v) = json(&["check", p, "Stair"]);
    assert_eq!(code, 0);
    assert_eq!(v["schema"], "1");
    assert_eq!(v["verdicts"]["burch"], false);
    let (code, v) = json(&["check", p, "Square", "--route", "all"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdicts"]["burch"], true);
    assert_eq!(v["verdicts"]["routes_agree"], true);
    assert_eq!(v["verdicts"]["route_omega2"], true);
    let cube = session("ring 32003 x\nideal I = x^3\n");
    let (code, v) = json(&["check", cube.path().to_str().unwrap(), "I"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdicts"]["burch"], true);
}

#[test]
fn malformed_input_exits_2_with_position() {
    let f = session("ring 32003 x y\nideal I = x^2 +* y\n");
    let out = burch(&["check", f.path().to_str().unwrap(), "I"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 2") && err.contains("position"), "{err}");
    let out = burch(&["check", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let missing = session(TWO);
    let out = burch(&["check", missing.path().to_str().unwrap(), "Nope"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn resolve_residue_field() {
    let f = session(TWO);
    let p = f.path().to_str().unwrap();
    let (code, v) = json(&["resolve", p, "Stair", "--length", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["invariants"]["betti"], serde_json::json!([1, 2, 4, 8]));
    assert_eq!(v["verdicts"]["k_summand_syzygy_2"], false);
    assert_eq!(v["verdicts"]["k_summand_syzygy_3"], true);
    assert_eq!(v["witnesses"]["k_summand_syzygy_3"], serde_json::json!(["x^3*y", "0", "0", "0"]));
    assert_eq!(v["invariants"]["entry_ideal_1"], serde_json::json!(["y", "x"]));
}

#[test]
fn resolve_free_and_hypersurface() {
    let f = session(TWO);
    let (code, v) = json(&["resolve", f.path().to_str().unwrap(), "Square", "F", "--length", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["invariants"]["betti"], serde_json::json!([2, 0, 0, 0]));
    let h = session("ring 32003 x\nideal I = x^3\n");
    let (code, v) = json(&["--max-length", "5", "resolve", h.path().to_str().unwrap(), "I"]);
    assert_eq!(code, 0);
    assert_eq!(v["invariants"]["betti"], serde_json::json!([1, 1, 1, 1, 1, 1]));
}

#[test]
fn non_artinian_is_a_precondition_failure() {
    let f = session(TWO);
    let out = burch(&["resolve", f.path().to_str().unwrap(), "Plane"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn syzygy_summand_tor_and_fullness() {
    let f = session(TWO);
    let p = f.path().to_str().unwrap();
    let (code, v) = json(&["syzygy-summand", p, "Square", "--index", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdicts"]["k_summand"], true);
    let (code, v) = json(&["--max-length", "4", "tor", p, "Stair", "k", "k"]);
    assert_eq!(code, 0);
    assert_eq!(v["invariants"]["tor"], serde_json::json!([1, 2, 4, 8, 16]));
    let (_, v) = json(&["tor", p, "Square", "L", "L", "--index", "3"]);
    assert_eq!(v["invariants"]["indices"], serde_json::json!([3]));
    let (code, v) = json(&["mfull", p, "Line"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdicts"]["m_full"], "yes");
    assert_eq!(v["verdicts"]["weakly_m_full"], true);
}

#[test]
fn cut_and_fibre() {
    let f = session(
        "ring 32003 x y z\nideal I = x^2*z^2 - y^2, x^4 - y*z^2, x^2*y - z^4\nideal Z = x*y\n",
    );
    let p = f.path().to_str().unwrap();
    let (code, v) = json(&["cut", p, "I", "--by", "x"]);
    assert_eq!(code, 0);
    assert_eq!(v["witnesses"]["ideal"], serde_json::json!(["y^2", "y*z^2", "z^4"]));
    assert_eq!(v["verdicts"]["burch_along_sequence"], true);
    assert_eq!(v["verdicts"]["ring_burch_along_sequence"], true);
    let (code, v) = json(&["cut", p, "I", "--by", "y"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdicts"]["burch_along_sequence"], false);
    let out = burch(&["cut", p, "Z", "--by", "x"]);
    assert_eq!(out.status.code(), Some(3));
    let out = burch(&["cut", p, "I", "--by", "x^2"]);
    assert_eq!(out.status.code(), Some(3));

    let g = session("ring 32003 x y u\nideal S = x^2, y^2\nideal T = u^3\nideal U = x^3, u\n");
    let q = g.path().to_str().unwrap();
    let (code, v) = json(&["fibre", q, "S", "T"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdicts"]["burch"], true);
    assert_eq!(v["verdicts"]["direct"], true);
    assert_eq!(v["verdicts"]["identities"], serde_json::json!([true, true, true, true]));
    let out = burch(&["fibre", q, "S", "U"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn sweep_counts_and_errors() {
    let (code, v) = json(&["sweep", "--max-socle-degree", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdicts"]["counterexamples"], 0);
    assert_eq!(v["invariants"]["scanned"], 41);
    let (code, v) = json(&["sweep", "--max-socle-degree", "1", "--checks", "equivalence,choi"]);
    assert_eq!(code, 0);
    assert_eq!(v["invariants"]["scanned"], 4);
    assert_eq!(v["invariants"]["checks"], serde_json::json!(["equivalence", "choi"]));
    let out = burch(&["sweep", "--checks", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
    let out = burch(&["sweep", "--max-socle-degree", "40"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn corpus_runs() {
    let (code, full) = json(&["corpus"]);
    assert_eq!(code, 0);
    let verdicts = full["verdicts"].as_object().unwrap();
    assert!(verdicts.len() >= 10);
    assert!(verdicts.values().all(|x| x == "pass"));
    let (code, v) = json(&["corpus", "--only", "residue-resolution"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdicts"].as_object().unwrap().len(), 1);
    let (code, small) = json(&["--modulus", "101", "corpus"]);
    assert_eq!(code, 0);
    assert_eq!(small["verdicts"], full["verdicts"]);
    let out = burch(&["corpus", "--only", "nothing"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn reports_are_deterministic() {
    let f = session(TWO);
    let p = f.path().to_str().unwrap();
    for args in [
        vec!["--json", "resolve", p, "Stair", "--length", "3"],
        vec!["--json", "--seed", "7", "mfull", p, "Stair"],
        vec!["invariants", p, "Square"],
    ] {
        let a = burch(&args);
        let b = burch(&args);
        assert_eq!(a.stdout, b.stdout);
    }
    let (_, v) = json(&["--timing", "check", p, "Square"]);
    assert!(v["timing_ms"].is_u64());
    let (_, v) = json(&["check", p, "Square"]);
    assert!(v.get("timing_ms").is_none());
}

#[test]
fn modulus_override_keeps_verdicts() {
    let f = session(TWO);
    let p = f.path().to_str().unwrap();
    let (_, a) = json(&["check", p, "Stair", "--route", "all"]);
    let (_, b) = json(&["--modulus", "101", "check", p, "Stair", "--route", "all"]);
    assert_eq!(a["verdicts"], b["verdicts"]);
    let out = burch(&["--modulus", "100", "check", p, "Stair"]);
    assert_eq!(out.status.code(), Some(2));
}
