//! Simple types: rules, errors, relevance and preservation under reduction.

use lmcalc::gen::Gen;
use lmcalc::meta::{fnames, fv};
use lmcalc::reduce::{lm_redexes, lm_step, meaningful_reducts};
use lmcalc::typing::*;
use lmcalc::{parse_object, parse_type, Error, Object, Type};

fn obj(s: &str) -> Object {
    parse_object(s).unwrap_or_else(|e| panic!("{}: {}", s, e))
}

fn ty(s: &str) -> Type {
    parse_type(s).unwrap()
}

fn typed(o: &str, env: &str) -> Derivation {
    let (g, d) = parse_env(env).unwrap();
    check(&obj(o), &g, &d).unwrap_or_else(|e| panic!("{}: {}", o, e))
}

fn ill_typed(o: &str, env: &str) -> String {
    let (g, d) = parse_env(env).unwrap();
    match check(&obj(o), &g, &d) {
        Err(Error::Type(m)) => m,
        other => panic!("{} should not type: {:?}", o, other),
    }
}

#[test]
fn environments_parse() {
    let (g, d) = parse_env("x:A, f:(A -> B) -> C, 'a:B").unwrap();
    assert_eq!(g.len(), 2);
    assert_eq!(d.values().next(), Some(&ty("B")));
    assert_eq!(g[&lmcalc::Var::new("f")], ty("(A -> B) -> C"));
    assert!(parse_env("x").is_err());
}

#[test]
fn abstraction_and_application() {
    let d = typed("\\x:A. f x", "f:A -> B");
    assert_eq!(d.rule, TRule::Abs);
    assert_eq!(d.term_type(), Some(&ty("A -> B")));
    assert_eq!(d.premises[0].rule, TRule::App);
}

#[test]
fn mu_and_named_commands() {
    let d = typed("mu 'a:A. ['b] f (mu 'c:B. ['a] x)", "f:B -> C, x:A, 'b:C");
    assert_eq!(d.term_type(), Some(&ty("A")));
    assert_eq!(d.premises[0].ty, JType::Command);
    assert!(d.delta.contains_key(&lmcalc::Name::new("b")));
    assert!(!d.delta.contains_key(&lmcalc::Name::new("a")));
}

#[test]
fn explicit_substitution_takes_the_argument_type() {
    let d = typed("(f x)[x \\ y]", "f:A -> B, y:A");
    assert_eq!(d.rule, TRule::Sub);
    assert_eq!(d.term_type(), Some(&ty("B")));
}

#[test]
fn replacement_and_stack_types() {
    let d = typed("(['a] f)['k/'a:A -> B \\ y . #]", "f:A -> B, y:A, 'k:B");
    assert_eq!(d.rule, TRule::Repl);
    let s = &d.premises[1];
    assert_eq!(s.rule, TRule::StackPush);
    assert_eq!(s.ty, JType::Stack(vec![ty("A")]));
    assert_eq!(s.premises[1].rule, TRule::StackEmpty);
}

#[test]
fn type_errors() {
    assert!(ill_typed("f x", "f:A, x:A").contains("not a function"));
    assert!(ill_typed("f x", "f:A -> B, x:B").contains("argument"));
    assert!(ill_typed("\\x. x", "").contains("annotation"));
    assert!(ill_typed("mu 'a. ['a] x", "x:A").contains("annotation"));
    assert!(ill_typed("['a] x", "x:A, 'a:B").contains("expects"));
    assert!(ill_typed("(['a] f)['k/'a:A \\ y . #]", "f:A, y:A, 'k:B").contains("annotated"));
    assert!(ill_typed("x", "").contains("free variable"));
    assert!(ill_typed("['a] x", "x:A").contains("free name"));
}

#[test]
fn judgments_are_relevant() {
    let d = typed("\\x:A. f", "f:B, y:C, 'z:D");
    assert_eq!(d.judgment(), "f:B |- \\x:A. f : A -> B | ");
    let mut g = Gen::new(17);
    for _ in 0..300 {
        let t = g.typed_term(14);
        let d = check(&t.obj, &t.gamma, &t.delta).unwrap();
        assert_eq!(d.gamma.keys().cloned().collect::<Vec<_>>(), fv(t.obj.as_ref()).into_iter().collect::<Vec<_>>());
        assert_eq!(d.delta.keys().cloned().collect::<Vec<_>>(), fnames(t.obj.as_ref()).into_iter().collect::<Vec<_>>());
    }
}

#[test]
fn reduction_preserves_types() {
    let mut g = Gen::new(29);
    for _ in 0..300 {
        let t = g.typed_term(14);
        let d = check(&t.obj, &t.gamma, &t.delta).unwrap();
        let mut reducts: Vec<Object> = lm_redexes(&t.obj)
            .into_iter()
            .map(|(r, p)| lm_step(&t.obj, r, &p).unwrap())
            .collect();
        reducts.extend(meaningful_reducts(&t.obj).into_iter().map(|(_, _, q)| q));
        for q in reducts {
            let dq = check(&q, &t.gamma, &t.delta).unwrap_or_else(|e| panic!("{} -> {}: {}", t.obj, q, e));
            assert_eq!(dq.ty, d.ty, "{} -> {}", t.obj, q);
        }
    }
}
