//! Reduction rules, their refined replacement variants, canonical forms,
//! meaningful reduction and the projection to lambda-mu.

use lmcalc::gen::Gen;
use lmcalc::lmu::{lmu_redexes, lmu_step};
use lmcalc::meta::alpha_eq;
use lmcalc::reduce::*;
use lmcalc::{parse_object, Object, Path, Step};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn obj(s: &str) -> Object {
    parse_object(s).unwrap_or_else(|e| panic!("{}: {}", s, e))
}

fn assert_alpha(got: &Object, want: &str) {
    let w = obj(want);
    assert!(alpha_eq(got, &w), "got {}\nwant {}", got, w);
}

fn step_at_root(o: &str, rule: Rule) -> Object {
    lm_step(&obj(o), rule, &Path::root()).unwrap_or_else(|e| panic!("{} on {}: {}", rule, o, e))
}

#[test]
fn beta_acts_at_a_distance() {
    let r = step_at_root("(\\x. x y)[y \\ z] w", Rule::B);
    assert_alpha(&r, "(x y)[x \\ w][y \\ z]");
}

#[test]
fn substitution_step() {
    assert_alpha(&step_at_root("(x x)[x \\ y]", Rule::S), "y y");
}

#[test]
fn mu_step_creates_a_replacement() {
    let r = step_at_root("(mu 'a. ['a] x) y", Rule::M);
    assert_alpha(&r, "mu 'b. (['a] x)['b/'a \\ y . #]");
}

#[test]
fn replacement_step() {
    let r = step_at_root("(['a] x (mu 'd. ['a] z))['b/'a \\ y . #]", Rule::R);
    assert_alpha(&r, "['b] x (mu 'd. ['b] z y) y");
}

#[test]
fn rules_refuse_non_redexes() {
    assert!(lm_step(&obj("x y"), Rule::B, &Path::root()).is_err());
    assert!(lm_step(&obj("x y"), Rule::S, &Path(vec![Step::AppArg])).is_err());
}

fn classify(o: &str) -> Rule {
    classify_r(&obj(o), &Path::root()).unwrap().rule
}

#[test]
fn replacement_redexes_are_classified() {
    // target absent, or occurring twice
    assert_eq!(classify("(['c] x)['b/'a \\ y . #]"), Rule::RNeq1);
    assert_eq!(classify("(['a] x (mu 'd. ['a] z))['b/'a \\ y . #]"), Rule::RNeq1);
    // one occurrence, linear or not
    assert_eq!(classify("(['a] x)['b/'a \\ y . #]"), Rule::N);
    assert_eq!(classify("(['c] f (mu 'd. ['a] x))['b/'a \\ y . #]"), Rule::NNonlin);
    // the occurrence is a renaming replacement
    assert_eq!(classify("((['e] x)['a/'e \\ #])['b/'a \\ y . #]"), Rule::W);
    assert_eq!(classify("((['e] x)['a/'e \\ z . #])['b/'a \\ y . #]"), Rule::C);
    assert_eq!(classify("(['c] f (mu 'd. (['e] x)['a/'e \\ z . #]))['b/'a \\ y . #]"), Rule::CNonlin);
    assert_eq!(classify("(['c] f (mu 'd. (['e] x)['a/'e \\ #]))['b/'a \\ y . #]"), Rule::WNonlin);
    // empty stacks are inert
    assert_eq!(classify("(['a] x)['b/'a \\ #]"), Rule::REmpty);
}

#[test]
fn meaningful_rules() {
    for r in [Rule::RNeq1, Rule::NNonlin, Rule::WNonlin, Rule::CNonlin] {
        assert!(r.is_meaningful_r());
    }
    for r in [Rule::N, Rule::W, Rule::C, Rule::REmpty, Rule::B, Rule::M] {
        assert!(!r.is_meaningful_r());
    }
    assert_eq!(Rule::parse(&Rule::CNonlin.to_string()), Some(Rule::CNonlin));
}

#[test]
fn canon_composes_and_swaps_replacements() {
    let c = canon(&obj("((['e] x)['a/'e \\ z . #])['b/'a \\ y . #]"));
    assert_alpha(&c, "(['e] x)['b/'e \\ z . y . #]");
    let c = canon(&obj("((['e] x)['a/'e \\ #])['b/'a \\ y . #]"));
    assert_alpha(&c, "((['e] x)['a/'e \\ y . #])['b/'a \\ #]");
}

#[test]
fn canon_trace_replays() {
    let o = obj("(\\x. mu 'a. ['a] x) y z");
    let (c, trace) = canon_traced(&o);
    let mut cur = o.clone();
    for s in &trace {
        cur = lm_step(&cur, s.rule, &s.path).unwrap();
        assert!(alpha_eq(&cur, &s.result));
        assert!(matches!(s.rule, Rule::B | Rule::M | Rule::C | Rule::W));
    }
    assert!(alpha_eq(&cur, &c));
    assert!(is_canonical(&c));
    assert!(trace[0].to_string().starts_with("B @ "));
}

#[test]
fn meaningful_steps_end_canonical() {
    let o = canon(&obj("(\\x. x x) (\\y. y)"));
    let rs = meaningful_reducts(&o);
    assert_eq!(rs.len(), 1);
    assert_eq!(rs[0].0, Rule::S);
    assert!(is_canonical(&rs[0].2));
    assert_alpha(&rs[0].2, "y[y \\ \\y. y]");
}

#[test]
fn linear_n_is_not_meaningful() {
    let o = obj("(['a] x)['b/'a \\ y . #]");
    assert!(is_canonical(&o));
    assert!(meaningful_redexes(&o).is_empty());
}

#[test]
fn plain_and_refined_normal_forms() {
    let o = obj("(mu 'a. ['a] x) y");
    let (p, _) = reduce_to_nf(&o, 100, Mode::Plain).unwrap();
    assert_alpha(&p, "mu 'b. ['b] x y");
    let (r, _) = reduce_to_nf(&o, 100, Mode::Refined).unwrap();
    assert_alpha(&r, "mu 'b. ['b] x y");
    // renaming replacements only fire in plain mode
    let o = obj("(['a] x)['b/'a \\ #]");
    let (p, _) = reduce_to_nf(&o, 100, Mode::Plain).unwrap();
    assert_alpha(&p, "['b] x");
    let (r, trace) = reduce_to_nf(&o, 100, Mode::Refined).unwrap();
    assert!(trace.is_empty());
    assert!(alpha_eq(&r, &o));
}

#[test]
fn reduction_budget_is_enforced() {
    let omega = obj("(\\x. x x) (\\x. x x)");
    assert!(matches!(
        reduce_to_nf(&omega, 50, Mode::Plain),
        Err(lmcalc::Error::Budget(50))
    ));
    assert!(!explore(&omega, 100).complete || explore(&omega, 100).normal_forms.is_empty());
}

#[test]
fn exploration_finds_the_normal_form() {
    let ex = explore(&obj("(\\x. \\y. x) a ((\\z. z) b)"), 1000);
    assert!(ex.complete);
    assert_eq!(ex.normal_forms.len(), 1);
    assert_alpha(&ex.normal_forms[0], "a");
}

#[test]
fn projection_and_expansion() {
    let o = obj("mu 'c. (['a] x)['c/'a \\ y . z . #]");
    assert_alpha(&projection(&o), "mu 'c. ['c] x y z");
    assert_alpha(&expansion(&o), "mu 'c. ['c] (mu 'a. ['a] x) y z");
    assert_alpha(&projection(&obj("(x x)[x \\ y]")), "y y");
    assert_alpha(&expansion(&obj("(x x)[x \\ y]")), "(\\x. x x) y");
    assert_alpha(&expansion(&obj("(['a] x)['c/'a \\ #]")), "['c] mu 'a. ['a] x");
}

fn lmu_reaches(from: &Object, to: &Object, depth: usize) -> bool {
    let mut layer = vec![from.clone()];
    for _ in 0..=depth {
        if layer.iter().any(|o| alpha_eq(o, to)) {
            return true;
        }
        layer = layer
            .iter()
            .flat_map(|o| lmu_redexes(o).into_iter().map(move |(r, p)| lmu_step(o, r, &p).unwrap()))
            .collect();
        if layer.len() > 5000 {
            return false;
        }
    }
    false
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn canon_is_idempotent_and_strategy_independent(seed in any::<u64>(), size in 1usize..24) {
        let mut g = Gen::new(seed);
        let o = g.untyped_object(size);
        let c = canon(&o);
        prop_assert!(is_canonical(&c));
        prop_assert!(alpha_eq(&canon(&c), &c));
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        prop_assert!(alpha_eq(&canon_random(&o, &mut rng), &c));
    }

    #[test]
    fn projections_are_pure(seed in any::<u64>(), size in 1usize..24) {
        let mut g = Gen::new(seed);
        let o = g.untyped_object(size);
        prop_assert!(lmcalc::lmu::is_pure(projection(&o).as_ref()));
        prop_assert!(lmcalc::lmu::is_pure(expansion(&o).as_ref()));
    }

    #[test]
    fn steps_project_to_lambda_mu_reductions(seed in any::<u64>(), size in 1usize..16) {
        let mut g = Gen::new(seed);
        let t = g.typed_term(size);
        for (r, p) in lm_redexes(&t.obj) {
            let o2 = lm_step(&t.obj, r, &p).unwrap();
            let (a, b) = (projection(&t.obj), projection(&o2));
            prop_assert!(lmu_reaches(&a, &b, 6), "{} @ {}: {} does not reach {}", r, p, a, b);
        }
    }

    #[test]
    fn objects_reduce_to_their_projection(seed in any::<u64>(), size in 1usize..16) {
        let mut g = Gen::new(seed);
        let t = g.typed_term(size);
        let ex = explore(&t.obj, 5000);
        prop_assume!(ex.complete);
        let pr = projection(&t.obj);
        let (nf, _) = reduce_to_nf(&pr, 5000, Mode::Plain).unwrap();
        prop_assert!(ex.normal_forms.iter().all(|n| alpha_eq(n, &nf)));
    }
}
