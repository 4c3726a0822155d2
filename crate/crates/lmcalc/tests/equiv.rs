//! Axiom instances, bounded equivalence search and certificate replay.

use lmcalc::equiv::*;
use lmcalc::gen::Gen;
use lmcalc::meta::alpha_eq;
use lmcalc::reduce::{canon, is_canonical};
use lmcalc::{harness, parse_object, Object};

fn obj(s: &str) -> Object {
    parse_object(s).unwrap_or_else(|e| panic!("{}: {}", s, e))
}

fn certified(o: &Object, p: &Object) -> Certificate {
    match equiv(o, p, Bounds::default(), false) {
        EquivResult::Equivalent(c) => {
            check_certificate(&c, p, false).unwrap_or_else(|e| panic!("{}\n{}", e, c));
            c
        }
        other => panic!("{} vs {}: {:?}", o, p, other),
    }
}

#[test]
fn axiom_names_round_trip() {
    for k in AxiomKind::WITH_REN {
        assert_eq!(AxiomKind::parse(&k.to_string()), Some(k));
    }
    assert_eq!(AxiomKind::parse("beta"), None);
}

#[test]
fn instances_relate_canonical_objects() {
    let mut g = Gen::new(3);
    for _ in 0..200 {
        let o = canon(&g.untyped_object(14));
        for ax in axiom_instances(&o, true) {
            assert!(is_canonical(&ax.result), "{} gave {}", ax, ax.result);
            assert_eq!(ax.result.sort(), o.sort());
        }
    }
}

#[test]
fn theta_and_its_inverse() {
    let c = certified(&obj("\\y. mu 'a. ['a] x"), &obj("\\y. x"));
    assert_eq!(c.steps.len(), 1);
    assert_eq!(c.steps[0].kind, AxiomKind::Theta);
    certified(&obj("\\y. x"), &obj("\\y. mu 'a. ['a] x"));
}

#[test]
fn rho_relates_named_mu_to_renaming() {
    let c = certified(&obj("mu 'g. ['k] mu 'b. ['b] x"), &obj("mu 'g. (['b] x)['k/'b \\ #]"));
    assert!(c.steps.iter().any(|s| s.kind == AxiomKind::Rho));
}

#[test]
fn lin_executes_a_linear_replacement() {
    let c = certified(&obj("mu 'k. (['a] x)['k/'a \\ y . #]"), &obj("mu 'k. ['k] x y"));
    assert_eq!(c.steps[0].kind, AxiomKind::Lin);
}

#[test]
fn exs_moves_a_substitution() {
    let o = obj("(x z)[x \\ w]");
    let p = obj("x[x \\ w] z");
    let c = certified(&o, &p);
    assert!(c.steps.iter().all(|s| s.kind == AxiomKind::Exs));
}

#[test]
fn pp_permutes_named_mus() {
    certified(
        &obj("mu 'g. ['k] mu 'a. ['l] mu 'b. ['a] x"),
        &obj("mu 'g. ['l] mu 'b. ['k] mu 'a. ['a] x"),
    );
}

#[test]
fn certificate_when_the_search_meets_on_the_second_side() {
    let o = obj("['k] mu 'a1. (['l] mu 'a2. (['l] \\x352. x352)['a2/'a350 \\ (mu 'a351. ['a351] g) . #])['a1/'a349 \\ h f . #]");
    let p = obj("['l] mu 'a2. (['k] mu 'a1. (['l] \\x352. x352)['a1/'a349 \\ h f . #])['a2/'a350 \\ (mu 'a351. ['a351] g) . #]");
    certified(&o, &p);
    certified(&p, &o);
}

#[test]
fn distinct_free_variables_are_not_equivalent() {
    match equiv(&obj("\\y. x"), &obj("\\y. z"), Bounds::default(), false) {
        EquivResult::Exhausted { .. } | EquivResult::Unknown { .. } => {}
        other => panic!("{:?}", other),
    }
    assert!(!equiv(&obj("x"), &obj("['a] x"), Bounds::default(), false).is_equivalent());
}

#[test]
fn tiny_bounds_give_up() {
    let o = obj("mu 'g. ['k] mu 'a. ['l] mu 'b. ['a] x");
    let p = obj("mu 'g. ['l] mu 'b. ['k] mu 'a. ['a] x");
    let b = Bounds { max_states: 3, max_depth: 1 };
    assert!(matches!(equiv(&o, &p, b, false), EquivResult::Unknown { .. }));
}

#[test]
fn forged_certificates_are_rejected() {
    let o = obj("\\y. mu 'a. ['a] x");
    let mut c = certified(&o, &obj("\\y. x"));
    c.steps[0].result = obj("\\y. z");
    assert!(check_certificate(&c, &obj("\\y. z"), false).is_err());
    let c = Certificate { start: o.clone(), steps: vec![] };
    let e = check_certificate(&c, &obj("\\y. x"), false).unwrap_err();
    assert!(e.to_string().contains("ends at"));
}

#[test]
fn generated_pairs_are_one_axiom_apart() {
    let mut g = Gen::new(9);
    for k in AxiomKind::EQUIV {
        for _ in 0..10 {
            let Some((t, ax)) = g.equiv_pair(k, 12, false) else { continue };
            assert_eq!(ax.kind, k);
            let found = one_axiom_apart(&t.obj, &ax.result, false).is_some()
                || one_axiom_apart(&ax.result, &t.obj, false).is_some();
            assert!(found, "{}: {} / {}", k, t.obj, ax.result);
            let c = certified(&t.obj, &ax.result);
            assert!(alpha_eq(&c.start, &canon(&t.obj)));
        }
    }
}

#[test]
fn admissible_equalities_hold() {
    let rep = harness::admissible_check(4, 20, 10, Bounds::default());
    assert!(rep.passed(), "{}", rep.summary());
}
