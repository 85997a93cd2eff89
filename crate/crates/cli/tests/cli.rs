use std::io::Write;
use std::process::{Command, Output};

use tempfile::NamedTempFile;

const K22: &str = "bdg 1\n2 2\n11\n11\n11\n11\n";
const TWO_K11: &str = "bdg 1\n2 2\n10\n01\n10\n01\n";

fn bdg_file(text: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bdg")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn path(f: &NamedTempFile) -> &str {
    f.path().to_str().unwrap()
}

#[test]
fn hamilton_prints_cycle() {
    let f = bdg_file(K22);
    let o = run(&["hamilton", path(&f)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "CYCLE x0 y0 x1 y1\n");
}

#[test]
fn check_reports_witness_with_note() {
    let f = bdg_file(TWO_K11);
    let o = run(&["check", "--cond", "a2star", path(&f)]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "FAIL a2star witness x0 y1 sum 2 bound 4\n");
    assert!(String::from_utf8_lossy(&o.stderr).contains("non-Hamiltonicity NOT implied"));
}

#[test]
fn check_passes_and_other_conditions() {
    let f = bdg_file(K22);
    for cond in ["a2star", "ak-star", "a_k", "strict-half", "dirac"] {
        let o = run(&["check", "--cond", cond, "--k", "1", path(&f)]);
        assert_eq!(o.status.code(), Some(0), "{cond}");
        assert!(stdout(&o).starts_with("PASS "), "{cond}");
    }
}

#[test]
fn hamilton_witness_with_oracle_fallback() {
    let f = bdg_file(TWO_K11);
    let o = run(&["hamilton", "--trace", "--fallback-oracle", path(&f)]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "WITNESS degree-pair x0 y1 sum 2 bound 4\nORACLE NONE\n");
}

#[test]
fn hamilton_json_mirrors_outcome() {
    let f = bdg_file(K22);
    let o = run(&["--json", "hamilton", "--trace", path(&f)]);
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc["outcome"]["Cycle"], serde_json::json!(["x0", "y0", "x1", "y1"]));
    assert!(doc["trace"].is_array());
}

#[test]
fn remark26_mode_without_matching() {
    let f = bdg_file("bdg 1\n2 2\n10\n10\n11\n11\n");
    let o = run(&["hamilton", "--mode", "remark26", path(&f)]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "NO-MATCHING\n");
}

#[test]
fn verify_theorem_three() {
    let o = run(&["verify-theorem", "--a", "3", "--k", "2", "--jobs", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "checked 262144 satisfying 1 counterexamples 0\n");
    let part = run(&["verify-theorem", "--a", "3", "--range", "0..1000"]);
    assert_eq!(stdout(&part), "checked 1000 satisfying 0 counterexamples 0\n");
}

#[test]
fn weakened_verification_lists_counterexamples() {
    let o = run(&["verify-theorem", "--a", "3", "--k", "1"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.starts_with("checked 262144 satisfying 1156 counterexamples 18\n"));
    assert!(out.contains("COUNTEREXAMPLE 122101 bdg 1/3 3/101/011/110/011/101/110"));
}

#[test]
fn oracle_and_count() {
    let f = bdg_file(K22);
    let o = run(&["oracle", path(&f)]);
    assert_eq!((o.status.code(), stdout(&o)), (Some(0), "CYCLE x0 y0 x1 y1\n".into()));
    let o = run(&["oracle", "--count", "--length", "4", path(&f)]);
    assert_eq!(stdout(&o), "COUNT 2\n");
    let o = run(&["oracle", "--length", "3", path(&f)]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn generators_emit_bdg() {
    let o = run(&["gen", "fig2", "--a", "2", "--b", "4", "--k", "0"]);
    assert_eq!(stdout(&o), "bdg 1\n2 4\n1100\n0011\n10\n10\n01\n01\n");
    let o = run(&["gen", "fig1"]);
    assert_eq!(stdout(&o), "bdg 1\n3 3\n101\n011\n110\n011\n101\n110\n");
    let o = run(&["gen", "complete", "--a", "2"]);
    assert_eq!(stdout(&o), K22);
    let a = run(&["gen", "random", "--a", "5", "--k", "2", "--seed", "7"]);
    let b = run(&["gen", "random", "--a", "5", "--k", "2", "--seed", "7"]);
    assert_eq!(a.stdout, b.stdout);
    let f = bdg_file(&stdout(&a));
    assert_eq!(run(&["check", path(&f)]).status.code(), Some(0));
    assert_eq!(run(&["hamilton", path(&f)]).status.code(), Some(0));
}

#[test]
fn searches() {
    let o = run(&["sharpness", "--a", "3", "--k", "1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).ends_with("found 18\n"));
    let o = run(&["conjecture", "--a", "2", "--b", "3"]);
    assert_eq!((o.status.code(), stdout(&o)), (Some(0), "found 0\n".into()));
    assert_eq!(run(&["conjecture", "--a", "3", "--b", "2"]).status.code(), Some(2));
}

#[test]
fn fmt_canonicalizes() {
    let f = bdg_file("# comment\nbdg 1\n2 2\n11\n11\n# rows of Y\n11\n11\n\n\n");
    assert_eq!(stdout(&run(&["fmt", path(&f)])), K22);
}

#[test]
fn usage_and_parse_errors_exit_two() {
    assert_eq!(run(&["hamilton"]).status.code(), Some(2));
    assert_eq!(run(&["check", "--cond", "nope", "x"]).status.code(), Some(2));
    let f = bdg_file("bdg 1\n2 2\n11\n");
    let o = run(&["check", path(&f)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error: "));
    let f = bdg_file("bdg 1\n2 3\n111\n111\n11\n11\n11\n");
    assert_eq!(run(&["hamilton", path(&f)]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let f = bdg_file(K22);
    let a = run(&["--json", "hamilton", "--trace", path(&f)]);
    let b = run(&["--json", "hamilton", "--trace", path(&f)]);
    assert_eq!(a.stdout, b.stdout);
}
