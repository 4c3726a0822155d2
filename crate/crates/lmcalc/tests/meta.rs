//! Free identifiers, capture-avoiding substitution and replacement,
//! renaming apart and alpha-equivalence.

use lmcalc::gen::Gen;
use lmcalc::meta::*;
use lmcalc::syntax::{Name, Object, Var};
use lmcalc::{parse_object, parse_stack, parse_term};
use proptest::prelude::*;

fn obj(s: &str) -> Object {
    parse_object(s).unwrap_or_else(|e| panic!("{}: {}", s, e))
}

fn v(s: &str) -> Var {
    Var::new(s)
}

fn n(s: &str) -> Name {
    Name::new(s)
}

#[test]
fn free_identifiers() {
    let o = obj("(\\x. x y)[y \\ z] (mu 'a. ['b] w)");
    let fvs: Vec<String> = fv(o.as_ref()).iter().map(|x| x.as_str().to_string()).collect();
    assert_eq!(fvs, ["w", "z"]);
    let fns: Vec<String> = fnames(o.as_ref()).iter().map(|a| a.as_str().to_string()).collect();
    assert_eq!(fns, ["b"]);
}

#[test]
fn replacement_binds_its_target_and_frees_its_source() {
    let o = obj("(['a] x)['b/'a \\ y . #]");
    assert!(!fnames(o.as_ref()).contains(&n("a")));
    assert!(fnames(o.as_ref()).contains(&n("b")));
    assert!(!name_not_at_all(&n("a"), o.as_ref()));
}

#[test]
fn named_occurrences_are_counted() {
    let c = obj("(['a] x (mu 'b. ['a] y))['a/'c \\ (mu 'd. ['a] z) . #]");
    assert_eq!(fnp(&n("a"), c.as_ref()), 4);
    assert_eq!(fnp(&n("b"), c.as_ref()), 0);
}

#[test]
fn substitution_avoids_capture() {
    let o = obj("\\y. x y");
    let r = substitute(&o, &v("x"), &parse_term("y").unwrap());
    assert!(alpha_eq(&r, &obj("\\z. y z")));
    assert!(!alpha_eq(&r, &obj("\\y. y y")));
}

#[test]
fn substitution_stops_at_shadowing_binders() {
    let o = obj("(\\x. x) x[x \\ x]");
    let r = substitute(&o, &v("x"), &parse_term("u").unwrap());
    assert!(alpha_eq(&r, &obj("(\\x. x) x[x \\ u]")));
}

#[test]
fn renaming_a_free_name() {
    let o = obj("['a] mu 'b. ['a] x");
    assert!(alpha_eq(&rename_name(&o, &n("a"), &n("c")), &obj("['c] mu 'b. ['c] x")));
    // Bound occurrences are untouched, and the binder moves out of the way.
    let o = obj("mu 'c. ['a] mu 'a. ['c] x");
    assert!(alpha_eq(&rename_name(&o, &n("a"), &n("c")), &obj("mu 'd. ['c] mu 'a. ['d] x")));
}

#[test]
fn replacement_appends_the_stack() {
    let s = parse_stack("y . #").unwrap();
    let r = replace(&obj("['a] \\x. mu 'b. ['a] x"), &n("c"), &n("a"), &s);
    assert!(alpha_eq(&r, &obj("['c] (\\x. mu 'b. ['c] x y) y")));
}

#[test]
fn replacement_avoids_capturing_stack_identifiers() {
    let s = parse_stack("x . #").unwrap();
    let r = replace(&obj("['a] \\x. x"), &n("c"), &n("a"), &s);
    assert!(alpha_eq(&r, &obj("['c] (\\z. z) x")));
}

#[test]
fn replacement_preconditions_are_checked() {
    let s = parse_stack("y . #").unwrap();
    assert!(replace_checked(&obj("['a] x"), &n("a"), &n("a"), &s).is_err());
    let bad = parse_stack("(mu 'b. ['a] y) . #").unwrap();
    assert!(replace_checked(&obj("['a] x"), &n("c"), &n("a"), &bad).is_err());
    assert!(replace_checked(&obj("['a] x"), &n("c"), &n("a"), &s).is_ok());
}

#[test]
fn alpha_equivalence_ignores_bound_names_and_annotations() {
    assert!(alpha_eq(&obj("\\x. mu 'a. ['a] x"), &obj("\\y. mu 'b. ['b] y")));
    assert!(alpha_eq(&obj("\\x:A. x"), &obj("\\x. x")));
    assert!(!alpha_eq(&obj("\\x. y"), &obj("\\x. z")));
    assert!(!alpha_eq(&obj("\\x. \\y. x"), &obj("\\x. \\y. y")));
    assert_eq!(alpha_key(&obj("(['a] x)['b/'a \\ #]")), alpha_key(&obj("(['c] x)['b/'c \\ #]")));
}

#[test]
fn fresh_supply_avoids_registered_identifiers() {
    let o = obj("\\x. x x1 mu 'a. ['a1] y");
    let mut sup = Supply::avoiding([o.as_ref()]);
    let x = sup.fresh_var(&v("x"));
    let a = sup.fresh_name(&n("a"));
    assert!(var_not_at_all(&x, o.as_ref()));
    assert!(name_not_at_all(&a, o.as_ref()));
    assert_ne!(sup.fresh_var(&v("x")), x);
}

proptest! {
    #[test]
    fn freshen_renames_apart_and_preserves_alpha(seed in any::<u64>(), size in 1usize..30) {
        let mut g = Gen::new(seed);
        let o = g.untyped_object(size);
        let f = freshen(&o);
        prop_assert!(is_renamed_apart(f.as_ref()));
        prop_assert!(alpha_eq(&f, &o));
        prop_assert_eq!(fv(f.as_ref()), fv(o.as_ref()));
        prop_assert_eq!(fnames(f.as_ref()), fnames(o.as_ref()));
    }

    #[test]
    fn alpha_canon_is_a_normal_form(seed in any::<u64>(), size in 1usize..30) {
        let mut g = Gen::new(seed);
        let o = g.untyped_object(size);
        prop_assert_eq!(alpha_canon(&freshen(&o)), alpha_canon(&o));
    }

    #[test]
    fn substituting_an_absent_variable_is_the_identity(seed in any::<u64>(), size in 1usize..25) {
        let mut g = Gen::new(seed);
        let o = g.untyped_object(size);
        let r = substitute(&o, &v("absent_var"), &parse_term("q").unwrap());
        prop_assert!(alpha_eq(&r, &o));
    }

    #[test]
    fn replacing_an_absent_name_is_the_identity(seed in any::<u64>(), size in 1usize..25) {
        let mut g = Gen::new(seed);
        let o = g.untyped_object(size);
        let s = parse_stack("q . #").unwrap();
        let r = replace(&o, &n("fresh_target"), &n("absent_name"), &s);
        prop_assert!(alpha_eq(&r, &o));
    }
}
