use lmcalc::equiv::{self, AxiomKind, Bounds};
use lmcalc::gen::{gen_typed, Gen};
use lmcalc::lmu::{is_pure, sigma_l2r, Sigma};
use lmcalc::meta::alpha_eq;
use lmcalc::typing::check;

#[test]
fn typed_generation_always_checks() {
    for seed in 0..1000 {
        let t = gen_typed(seed, 25);
        if let Err(e) = check(&t.obj, &t.gamma, &t.delta) {
            panic!("seed {}: {} does not check: {}", seed, t.obj, e);
        }
    }
}

#[test]
fn size_one_is_a_variable() {
    let t = gen_typed(7, 1);
    assert!(matches!(t.obj, lmcalc::Object::Term(lmcalc::Term::Var(_))));
}

#[test]
fn generation_is_deterministic() {
    for seed in 0..20 {
        assert_eq!(gen_typed(seed, 20).obj.to_string(), gen_typed(seed, 20).obj.to_string());
    }
}

#[test]
fn sigma_redexes_are_pure_instances() {
    let mut g = Gen::new(3);
    for k in Sigma::ALL {
        for _ in 0..20 {
            let o = g.sigma_redex(k, 12);
            assert!(is_pure(o.as_ref()));
            assert!(sigma_l2r(k, o.as_ref()).is_some(), "{} {}", k, o);
        }
    }
}

#[test]
fn equiv_pairs_for_every_axiom() {
    let mut g = Gen::new(11);
    for k in AxiomKind::WITH_REN {
        for _ in 0..10 {
            let (t, ax) = g.equiv_pair(k, 14, true).unwrap_or_else(|| panic!("no {} pair", k));
            assert_eq!(ax.kind, k);
            check(&ax.result, &t.gamma, &t.delta).unwrap();
            let r = equiv::equiv(&t.obj, &ax.result, Bounds { max_states: 50, max_depth: 1 }, k == AxiomKind::Ren);
            match r {
                equiv::EquivResult::Equivalent(c) => {
                    assert!(c.steps.len() <= 1);
                    equiv::check_certificate(&c, &ax.result, k == AxiomKind::Ren).unwrap();
                }
                other => panic!("{}: {} vs {}: {:?}", k, t.obj, ax.result, other),
            }
            assert!(!alpha_eq(&t.obj, &ax.result) || k == AxiomKind::Pp);
        }
    }
}
