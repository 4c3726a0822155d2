//! Concrete syntax, paths and positions.

use lmcalc::gen::Gen;
use lmcalc::meta::alpha_eq;
use lmcalc::syntax::{replace_at, subobject};
use lmcalc::{parse_object, parse_stack, parse_term, parse_type, Error, Object, Path, Sort, Step, Type};
use proptest::prelude::*;

fn obj(s: &str) -> Object {
    parse_object(s).unwrap_or_else(|e| panic!("{}: {}", s, e))
}

#[test]
fn sorts_are_inferred() {
    assert_eq!(obj("x").sort(), Sort::Term);
    assert_eq!(obj("['a] x").sort(), Sort::Command);
    assert_eq!(obj("x . y . #").sort(), Sort::Stack);
    assert_eq!(obj("#").sort(), Sort::Stack);
}

#[test]
fn application_is_left_associative() {
    assert_eq!(parse_term("f x y").unwrap(), parse_term("(f x) y").unwrap());
    assert_ne!(parse_term("f x y").unwrap(), parse_term("f (x y)").unwrap());
}

#[test]
fn explicit_substitution_binds_tighter_than_application() {
    assert_eq!(parse_term("f x[x \\ y]").unwrap(), parse_term("f (x[x \\ y])").unwrap());
}

#[test]
fn unicode_binders() {
    assert_eq!(parse_term("λx. μ'a. ['a] x").unwrap(), parse_term("\\x. mu 'a. ['a] x").unwrap());
}

#[test]
fn arrow_is_right_associative() {
    let t = parse_type("A -> B -> C").unwrap();
    assert_eq!(t, Type::arrow(Type::base("A"), Type::arrow(Type::base("B"), Type::base("C"))));
    assert_eq!(t.strip_arrows(2), Some(Type::base("C")));
    assert_eq!(t.strip_arrows(3), None);
}

#[test]
fn stacks_concatenate() {
    let s = parse_stack("x . #").unwrap().concat(&parse_stack("y . z . #").unwrap());
    assert_eq!(s, parse_stack("x . y . z . #").unwrap());
    assert_eq!(s.len(), 3);
}

#[test]
fn parse_errors_carry_positions() {
    match parse_object("\\x. (x y") {
        Err(Error::Parse { pos, .. }) => assert!(pos >= 4),
        other => panic!("{:?}", other),
    }
    assert!(parse_object("['a]").is_err());
    assert!(parse_object("x ]").is_err());
}

#[test]
fn paths_address_subobjects() {
    let o = obj("(['a] f x)['b/'a \\ y . #]");
    let p = Path(vec![Step::ReplBody, Step::NamedBody, Step::AppArg]);
    assert!(alpha_eq(&subobject(&o, &p).unwrap(), &obj("x")));
    let s = Path(vec![Step::ReplStack, Step::Item(0)]);
    assert!(alpha_eq(&subobject(&o, &s).unwrap(), &obj("y")));
    assert!(subobject(&o, &Path(vec![Step::MuBody])).is_none());
    let r = replace_at(&o, &p, obj("z")).unwrap();
    assert!(alpha_eq(&r, &obj("(['a] f z)['b/'a \\ y . #]")));
}

#[test]
fn replacing_with_the_wrong_sort_fails() {
    let o = obj("f x");
    let e = replace_at(&o, &Path(vec![Step::AppArg]), obj("['a] x")).unwrap_err();
    assert!(matches!(e, Error::SortMismatch { .. }));
}

#[test]
fn path_display_round_trips() {
    let p = Path(vec![Step::MuBody, Step::ReplStack, Step::Item(1), Step::AppFun]);
    assert_eq!(Path::parse(&p.to_string()), Some(p.clone()));
    assert_eq!(Path::parse(&Path::root().to_string()), Some(Path::root()));
    assert!(Path(vec![Step::MuBody]).is_prefix_of(&p));
    assert_eq!(
        Path(vec![Step::MuBody]).suffix_of(&p),
        Some(Path(vec![Step::ReplStack, Step::Item(1), Step::AppFun]))
    );
}

#[test]
fn positions_cover_every_node() {
    let o = obj("(\\x. x[y \\ z]) (mu 'a. ['a] w)");
    assert_eq!(o.as_ref().positions().len(), o.size());
}

proptest! {
    #[test]
    fn printing_then_parsing_is_the_identity(seed in any::<u64>(), size in 1usize..30) {
        let mut g = Gen::new(seed);
        let o = g.untyped_object(size);
        let back = parse_object(&o.to_string()).unwrap();
        prop_assert_eq!(back, o);
    }

    #[test]
    fn typed_terms_print_with_annotations(seed in any::<u64>(), size in 1usize..20) {
        let mut g = Gen::new(seed);
        let t = g.typed_term(size);
        let back = parse_object(&t.obj.to_string()).unwrap();
        prop_assert_eq!(back, t.obj);
    }
}
