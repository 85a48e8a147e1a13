use assert_cmd::Command;
use predicates::prelude::*;
use serde_json::Value;

fn farey(args: &[&str]) -> Command {
    let mut cmd = Command::cargo_bin("farey").unwrap();
    cmd.args(args);
    cmd
}

fn stdout(args: &[&str]) -> String {
    let out = farey(args).assert().success().get_output().stdout.clone();
    String::from_utf8(out).unwrap()
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&stdout(args)).unwrap()
}

#[test]
fn gamma2_symbol() {
    assert_eq!(
        stdout(&["symbol", "--group", "gamma:2"]),
        "[-oo 0 1 2 oo | 1 2 2 1]\n"
    );
}

#[test]
fn symbol_output_reparses() {
    for spec in [
        "gamma0:11",
        "gamma1:7",
        "gamma:4",
        "perm:e=(1 7)(2 4)(3 6),v=(1 3 4)(2 7 5)",
    ] {
        let text = stdout(&["symbol", "--group", spec]);
        let again = stdout(&["symbol", "--symbol", text.trim()]);
        assert_eq!(again, text, "{spec}");
    }
}

#[test]
fn gamma0_2_invariants() {
    let v = json(&["invariants", "--group", "gamma0:2", "--json"]);
    for (key, want) in [
        ("index", 3),
        ("genus", 0),
        ("cusps", 2),
        ("e2", 1),
        ("e3", 0),
        ("level", 2),
    ] {
        assert_eq!(v[key], want, "{key}");
    }
    let text = stdout(&["invariants", "--group", "gamma0:2"]);
    assert!(text.contains("index  3"));
}

#[test]
fn membership_answers() {
    farey(&["contains", "--group", "gamma:2", "--matrix", "1,1,0,1"])
        .assert()
        .success()
        .stdout("no\n");
    farey(&["contains", "--group", "gamma:2", "--matrix", "-1,2,0,-1"])
        .assert()
        .success()
        .stdout("yes\n");
    let v = json(&[
        "contains",
        "--group",
        "gamma0:5",
        "--matrix",
        "2,-1,5,-2",
        "--word",
        "--json",
    ]);
    assert_eq!(v["member"], true);
    assert!(v["word"].as_str().unwrap().starts_with('g'));
}

#[test]
fn word_certificates_use_generator_names() {
    let gens = stdout(&["generators", "--group", "gamma:2"]);
    assert_eq!(gens.lines().count(), 2);
    assert!(gens.starts_with("g1 = 1,2,0,1"));
    farey(&[
        "contains",
        "--group",
        "gamma:2",
        "--matrix",
        "3,-2,2,-1",
        "--word",
    ])
    .assert()
    .success()
    .stdout("yes\ng2\n");
}

#[test]
fn cosets_and_permutations() {
    let reps = stdout(&["cosets", "--group", "gamma0:5"]);
    assert_eq!(reps.lines().count(), 6);
    assert!(reps.starts_with("1 1,0,0,1\n"));
    let v = json(&["permrep", "--group", "gamma:2", "--json"]);
    assert_eq!(v["mu"], 6);
}

#[test]
fn congruence_methods() {
    farey(&["congruence", "--group", "gamma1:5"])
        .assert()
        .success()
        .stdout("hsu: congruence\nwohlfahrt: congruence\n");
    farey(&[
        "congruence",
        "--method",
        "hsu",
        "--group",
        "perm:e=(1 7)(2 4)(3 6),v=(1 3 4)(2 7 5)",
    ])
    .assert()
    .success()
    .stdout("noncongruence\n");
    farey(&[
        "congruence",
        "--method",
        "wohlfahrt",
        "--cap",
        "10",
        "--group",
        "gamma0:7",
    ])
    .assert()
    .success()
    .stdout(predicate::str::starts_with("inconclusive"));
}

#[test]
fn domain_exports() {
    let v = json(&["domain", "--group", "gamma0:3"]);
    assert!(v["arcs"]
        .as_array()
        .unwrap()
        .iter()
        .any(|a| a["kind"] == "odd-edge"));
    farey(&["domain", "--format", "svg", "--group", "gamma:3"])
        .assert()
        .success()
        .stdout(predicate::str::starts_with("<svg"));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["symbol", "--group", "gamma1:9"][..],
        &["cosets", "--group", "gamma0:12", "--json"],
        &["permrep", "--group", "gamma:3"],
        &["domain", "--format", "svg", "--group", "gamma0:6"],
    ] {
        assert_eq!(stdout(args), stdout(args));
    }
}

#[test]
fn exit_codes() {
    farey(&["symbol"]).assert().code(2);
    farey(&["frobnicate", "--group", "gamma:2"])
        .assert()
        .code(2);
    farey(&[
        "symbol",
        "--group",
        "gamma:2",
        "--symbol",
        "[-oo 0 oo | e o]",
    ])
    .assert()
    .code(2);
    farey(&["symbol", "--group", "delta:3"])
        .assert()
        .code(1)
        .stderr(predicate::str::contains("unknown group kind"));
    farey(&["symbol", "--symbol", "[-oo 0 2 oo | 1 e 1]"])
        .assert()
        .code(1);
    farey(&["contains", "--group", "gamma:2", "--matrix", "2,1,1,2"])
        .assert()
        .code(1);
    farey(&["symbol", "--group", "gamma:9", "--max-edges", "10"])
        .assert()
        .code(1)
        .stderr(predicate::str::contains("10 edges"));
}
