//! The `equivk` binary end to end.

use std::path::PathBuf;
use std::process::{Command, Output};

use equivk::report::{Report, ReportBody};

fn equivk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_equivk"))
        .args(args)
        .env_remove("EQUIVK_ORDER_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    dir.join(name)
}

fn kgroup_report(path: &PathBuf) -> equivk::report::KGroupReport {
    match Report::from_json(&std::fs::read_to_string(path).unwrap()).unwrap().body {
        ReportBody::Kgroup(k) => k,
        other => panic!("expected a kgroup report, got {other:?}"),
    }
}

#[test]
fn symmetric_three_sign() {
    let json = scratch("s3.json");
    let o = equivk(&[
        "kgroup",
        r#"{"family":"S","n":3,"lambda":{"convention":"sign"}}"#,
        "--sphere",
        "s1-lambda",
        "--json",
        json.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("rank 1"));
    let k = kgroup_report(&json);
    assert_eq!(k.rank, 1);
    // χ − ᵇχ for the two characters of C3 taking ω and ω² on the 3-cycle.
    assert_eq!(k.basis[0].coefficients, [0, 1, -1]);
    assert_eq!(k.action, [vec![vec![1]], vec![vec![1]], vec![vec![-1]]]);
}

#[test]
fn cyclic_six_is_trivial() {
    let o = equivk(&[
        "kgroup",
        r#"{"family":"C","n":6,"lambda":{"convention":"onto-pm1"}}"#,
        "--sphere",
        "s1-lambda",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("rank 0"));
}

#[test]
fn s_lambda_for_c2() {
    let json = scratch("c2.json");
    let o = equivk(&[
        "--json",
        json.to_str().unwrap(),
        "kgroup",
        r#"{"family":"C","n":2,"lambda":{"convention":"onto-pm1"}}"#,
        "--sphere",
        "s-lambda",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let k = kgroup_report(&json);
    assert_eq!((k.rank, k.basis[0].coefficients.clone()), (1, vec![1, -1]));
}

#[test]
fn spec_from_file() {
    let path = scratch("d4-spec.json");
    std::fs::write(&path, r#"{"family": "dihedral", "n": 4, "lambda": {"convention": "rotation-sign"}}"#).unwrap();
    let o = equivk(&["kgroup", path.to_str().unwrap(), "--sphere", "s1-lambda"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("rank 1"));
}

#[test]
fn chartab_prints_table() {
    let o = equivk(&["chartab", r#"{"family":"S","n":3}"#]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.lines().any(|l| l.split_whitespace().collect::<Vec<_>>() == ["χ2", "2", "0", "-1"]), "{out}");
}

#[test]
fn verify_all_upto_16() {
    let json = scratch("verify16.json");
    let o = equivk(&["verify", "--all-upto", "16", "--json", json.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    match Report::from_json(&std::fs::read_to_string(&json).unwrap()).unwrap().body {
        ReportBody::Verify(v) => {
            assert_eq!(v.failed, 0);
            assert!(v.passed > 100);
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn verify_single_spec() {
    let o = equivk(&["verify", r#"{"family":"Q8","lambda":{"generator_signs":[1,-1]}}"#]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("0 failed"));
}

#[test]
fn input_errors_exit_2() {
    let cases: [(&[&str], &str); 6] = [
        (&["kgroup", r#"{"family":"C","n":4}"#, "--sphere", "s1-lambda"], "lambda"),
        (&["chartab", r#"{"family":"D","n":"four"}"#], "`n`"),
        (&["chartab", r#"{"family":"product","factors":[{"family":"C","n":2},{"family":"Z"}]}"#], "factors[1].family"),
        (&["kgroup", r#"{"family":"C","n":3,"lambda":{"convention":"onto-pm1"}}"#, "--sphere", "s-lambda"], "lambda.convention"),
        (&["chartab", "/no/such/spec.json"], "cannot read"),
        (&["kgroup", r#"{"family":"C","n":2,"lambda":{"convention":"sign"}}"#, "--sphere", "bogus"], "bogus"),
    ];
    for (args, needle) in cases {
        let o = equivk(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(stderr(&o).contains(needle), "{args:?}: {}", stderr(&o));
    }
}

#[test]
fn order_cap_from_environment() {
    let spec = r#"{"family":"C","n":40}"#;
    let capped = Command::new(env!("CARGO_BIN_EXE_equivk"))
        .args(["chartab", spec])
        .env("EQUIVK_ORDER_CAP", "32")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(2));
    assert!(stderr(&capped).contains("limit 32"), "{}", stderr(&capped));
    assert_eq!(equivk(&["chartab", spec]).status.code(), Some(0));
    let bad = Command::new(env!("CARGO_BIN_EXE_equivk"))
        .args(["chartab", spec])
        .env("EQUIVK_ORDER_CAP", "lots")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn help_documents_conventions() {
    let o = equivk(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    for word in ["onto-pm1", "reflection-sign", "rotation-sign", "sign", "generator_signs", "EQUIVK_ORDER_CAP"] {
        assert!(out.contains(word), "{word}");
    }
}
