//! The `lmtool` binary: outputs and exit codes.

use std::process::{Command, Output};

fn lmtool(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lmtool")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn canon_prints_the_canonical_form() {
    let o = lmtool(&["canon", "(mu 'a.['a]x) y z"]);
    assert_eq!(o.status.code(), Some(0));
    let want = lmcalc::parse_object("mu 'c. (['a] x)['c/'a \\ y . z . #]").unwrap();
    let got = lmcalc::parse_object(stdout(&o).trim()).unwrap();
    assert!(lmcalc::meta::alpha_eq(&got, &want));
}

#[test]
fn traces_use_the_step_format() {
    let o = lmtool(&["canon", "--trace", "(mu 'a.['a]x) y z"]);
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 4);
    assert!(lines[0].starts_with("M @ App.0 \u{21d2} "));
    assert!(lines[2].starts_with("C @ "));
}

#[test]
fn equiv_prints_a_certificate_or_gives_up() {
    let o = lmtool(&["equiv", "--ren", "--max-states", "20000", "\\y. mu 'a. ['a] x", "\\y. x"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("theta+ @ Abs.0"));
    let o = lmtool(&["equiv", "x", "y"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("NOT-WITHIN-BOUNDS"));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(lmtool(&["parse", "(x"]).status.code(), Some(2));
    assert_eq!(lmtool(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(lmtool(&["reduce", "--mode", "lazy", "x"]).status.code(), Some(2));
    assert_eq!(lmtool(&["typecheck", "x", "--env", "x"]).status.code(), Some(2));
}

#[test]
fn type_errors_are_violations() {
    let o = lmtool(&["typecheck", "f x", "--env", "f:A, x:A"]);
    assert_eq!(o.status.code(), Some(1));
    let o = lmtool(&["typecheck", "\\x:A. f x", "--env", "f:A -> B"]);
    assert_eq!(stdout(&o).trim(), "f:A -> B |- \\x:A. f x : A -> B |");
}

#[test]
fn reduction_modes() {
    let o = lmtool(&["reduce", "--mode", "plain", "(['a] x)['b/'a \\ #]"]);
    assert_eq!(stdout(&o).trim(), "['b] x");
    let o = lmtool(&["reduce", "--mode", "refined", "(['a] x)['b/'a \\ #]"]);
    assert_eq!(stdout(&o).trim(), "(['a] x)['b/'a \\ #]");
    let o = lmtool(&["reduce", "--budget", "20", "(\\x. x x) (\\x. x x)"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn generated_terms_feed_back_into_the_tool() {
    let o = lmtool(&["gen", "--seed", "7", "--size", "10", "--cases", "3"]);
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 3);
    assert_eq!(out, stdout(&lmtool(&["gen", "--seed", "7", "--size", "10", "--cases", "3"])));
    for line in out.lines() {
        let (env, obj) = line.split_once(" |- ").unwrap();
        let t = lmtool(&["typecheck", obj, "--env", env]);
        assert_eq!(t.status.code(), Some(0), "{}", line);
        let p = lmtool(&["ppn", obj, "--env", env, "--nf", "full"]);
        assert_eq!(p.status.code(), Some(0), "{}", line);
        assert!(stdout(&p).contains("cuts: 0"));
    }
}

#[test]
fn ppn_writes_dot() {
    let path = std::env::temp_dir().join(format!("lmtool-{}.dot", std::process::id()));
    let o = lmtool(&["ppn", "--dot", path.to_str().unwrap(), "\\x:A. x"]);
    assert_eq!(o.status.code(), Some(0));
    let dot = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert!(dot.starts_with("digraph net {"));
}

#[test]
fn reports_end_with_a_verdict() {
    for args in [
        &["confluence-check", "--cases", "10", "--size", "8"][..],
        &["simcheck", "--cases", "20", "--size", "8"][..],
        &["bisim-check", "\\y. mu 'a. ['a] x", "\\y. x"][..],
    ] {
        let o = lmtool(args);
        assert_eq!(o.status.code(), Some(0), "{:?}", args);
        assert_eq!(stdout(&o).lines().last(), Some("PASS"));
    }
    let o = lmtool(&["bisim-check", "(['a] \\x. v)['k/'a \\ w . #]", "['k] v[x \\ w]"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o).lines().last(), Some("FAIL"));
}
