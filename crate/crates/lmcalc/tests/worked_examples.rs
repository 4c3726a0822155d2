//! Worked examples with frozen expected values.

use lmcalc::equiv::{self, AxiomKind, Bounds};
use lmcalc::lmu::{call_cc_typed, lmu_step, LmuRule};
use lmcalc::meta::{alpha_eq, replace, substitute};
use lmcalc::reduce::{self, canon, expansion, is_linear_path, LinearKind};
use lmcalc::syntax::{Name, Object, Path, Step, Term, Type, Var};
use lmcalc::typing::{check, VarCtx, NameCtx};
use lmcalc::{parse_object, parse_stack, parse_term};

fn obj(s: &str) -> Object {
    parse_object(s).unwrap_or_else(|e| panic!("{}: {}", s, e))
}

fn assert_alpha(got: &Object, want: &str) {
    let w = obj(want);
    assert!(alpha_eq(got, &w), "got {}\nwant {}", got, w);
}

#[test]
fn implicit_substitution() {
    let o = obj("(mu 'a. ['a] x) (\\z. z x)");
    let r = substitute(&o, &Var::new("x"), &parse_term("\\z. z").unwrap());
    assert_alpha(&r, "(mu 'a. ['a] \\z. z) (\\z. z (\\z. z))");
}

#[test]
fn implicit_replacement_lmu() {
    let o = obj("['a] x (mu 'b. ['a] y)");
    let s = parse_stack("(\\z. z) . #").unwrap();
    let r = replace(&o, &Name::new("a2"), &Name::new("a"), &s);
    assert_alpha(&r, "['a2] x (mu 'b. ['a2] y (\\z. z)) (\\z. z)");
}

#[test]
fn replacement_on_named() {
    let s = parse_stack("y1 . y2 . #").unwrap();
    let r = replace(&obj("['a] x"), &Name::new("g"), &Name::new("a"), &s);
    assert_alpha(&r, "['g] x y1 y2");
}

#[test]
fn replacement_accumulates_on_blocking_replacement() {
    let s = parse_stack("y1 . #").unwrap();
    let r = replace(&obj("(['a] x)['a/'b \\ z1 . #]"), &Name::new("g"), &Name::new("a"), &s);
    assert_alpha(&r, "(['g] x y1)['g/'b \\ z1 . y1 . #]");
}

#[test]
fn replacement_on_renaming_creates_fresh_name() {
    let s = parse_stack("y1 . y2 . #").unwrap();
    let r = replace(&obj("(['a] x)['a/'b \\ #]"), &Name::new("g"), &Name::new("a"), &s);
    assert_alpha(&r, "((['g] x y1 y2)['g2/'b \\ y1 . y2 . #])['g/'g2 \\ #]");
}

#[test]
fn canonical_form_and_expansion() {
    let o = obj("(mu 'a. ['a] x) y z");
    let c = canon(&o);
    assert_alpha(&c, "mu 'a2. (['a] x)['a2/'a \\ y . z . #]");
    assert_alpha(&expansion(&c), "mu 'a2. ['a2] (mu 'a. ['a] x) y z");
}

#[test]
fn call_cc_has_peirce_type() {
    let a = Type::base("A");
    let b = Type::base("B");
    let t = Object::Term(call_cc_typed(&a, &b));
    let d = check(&t, &VarCtx::new(), &NameCtx::new()).unwrap();
    let peirce = Type::arrow(Type::arrow(Type::arrow(a.clone(), b), a.clone()), a);
    assert_eq!(d.term_type(), Some(&peirce));
    assert!(d.gamma.is_empty() && d.delta.is_empty());
}

#[test]
fn axiom_judgment() {
    let mut g = VarCtx::new();
    g.insert(Var::new("x"), Type::base("A"));
    let d = check(&obj("x"), &g, &NameCtx::new()).unwrap();
    assert_eq!(d.judgment(), "x:A |- x : A | ");
    let d = check(&Object::Stack(parse_stack("#").unwrap()), &VarCtx::new(), &NameCtx::new()).unwrap();
    assert_eq!(d.ty.to_string(), "eps");
}

#[test]
fn linear_context_examples() {
    // ['a] [] : a term hole producing a command.
    let o = obj("['a] x");
    assert!(is_linear_path(&o, &Path::root(), &Path(vec![Step::NamedBody]), LinearKind::TC));
    // (['b] [] v)['a2/'a \ u . #] : a term hole producing a command here.
    let o = obj("(['b] x v)['a2/'a \\ u . #]");
    let hole = Path(vec![Step::ReplBody, Step::NamedBody, Step::AppFun]);
    assert!(is_linear_path(&o, &Path::root(), &hole, LinearKind::TC));
    // The argument position is not linear.
    let arg = Path(vec![Step::ReplBody, Step::NamedBody, Step::AppArg]);
    assert!(!is_linear_path(&o, &Path::root(), &arg, LinearKind::TC));
}

#[test]
fn mu_step_in_lmu() {
    let o = obj("(mu 'a. ['a] x) y");
    let r = lmu_step(&o, LmuRule::Mu, &Path::root()).unwrap();
    assert_alpha(&r, "mu 'a2. ['a2] x y");
}

#[test]
fn lin_axiom_instance() {
    let o = obj("mu 'a2. (['a] x)['a2/'a \\ y . #]");
    let p = obj("mu 'a2. ['a2] x y");
    let ax = equiv::one_axiom_apart(&o, &p, false).expect("lin instance");
    assert_eq!(ax.kind, AxiomKind::Lin);
    match equiv::equiv(&o, &p, Bounds::default(), false) {
        equiv::EquivResult::Equivalent(c) => {
            equiv::check_certificate(&c, &p, false).unwrap();
        }
        other => panic!("{:?}", other),
    }
}

#[test]
fn rho_and_theta_instances() {
    let o = obj("mu 'g. ['a] mu 'b. ['b] x");
    let kinds: Vec<AxiomKind> = equiv::axiom_instances(&o, false).iter().map(|a| a.kind).collect();
    assert!(kinds.contains(&AxiomKind::Rho));
    let o = obj("\\y. mu 'a. ['a] x");
    let ax = equiv::one_axiom_apart(&o, &obj("\\y. x"), false).unwrap();
    assert_eq!(ax.kind, AxiomKind::Theta);
}

#[test]
fn equiv_trivial_cases() {
    let o = obj("\\x. x y");
    match equiv::equiv(&o, &o, Bounds::default(), false) {
        equiv::EquivResult::Equivalent(c) => assert!(c.steps.is_empty()),
        other => panic!("{:?}", other),
    }
    assert!(!equiv::equiv(&obj("x"), &obj("y"), Bounds::default(), false).is_equivalent());
}

#[test]
fn lin_certificate_with_captured_name_is_rejected() {
    // 'a occurs in u, so lin does not apply.
    let o = obj("mu 'a2. (['a] x (mu 'd. ['a] z))['a2/'a \\ y . #]");
    let bad = equiv::Certificate {
        start: o.clone(),
        steps: vec![equiv::AxiomApp {
            kind: AxiomKind::Lin,
            left_to_right: true,
            path: Path(vec![Step::MuBody]),
            target: None,
            result: obj("mu 'a2. ['a2] x (mu 'd. ['a] z) y"),
        }],
    };
    let err = equiv::check_certificate(&bad, &bad.steps[0].result, false).unwrap_err();
    assert!(err.to_string().contains("step 0"));
}

#[test]
fn sigma8_is_not_a_strong_bisimulation() {
    let left = obj("(mu 'a. ['a] x) y");
    let right = obj("x y");
    assert_eq!(lmcalc::lmu::lmu_redexes(&left).len(), 1);
    assert_eq!(lmcalc::lmu::lmu_redexes(&right).len(), 0);
}

#[test]
fn canon_is_identity_on_pure_normal_forms() {
    let t: Term = parse_term("\\x. x (mu 'a. ['b] y)").unwrap();
    let o = Object::Term(t);
    assert!(reduce::is_canonical(&o));
    assert!(alpha_eq(&canon(&o), &o));
}
