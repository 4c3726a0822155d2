//! The C interface, driven from Rust through raw pointers.

use std::ffi::{c_char, CStr, CString};
use std::ptr;

use lmcalc_ffi::*;

fn parse(src: &str) -> *mut LmObject {
    let c = CString::new(src).unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { lm_parse(c.as_ptr(), &mut out) }, LmStatus::Ok);
    out
}

fn take_string(s: *mut c_char) -> String {
    let r = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { lm_string_free(s) };
    r
}

fn print(o: *const LmObject) -> String {
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { lm_print(o, &mut s) }, LmStatus::Ok);
    take_string(s)
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(lm_last_error()) }.to_str().unwrap().to_string()
}

#[test]
fn parse_print_and_sort() {
    let o = parse("['a] x y");
    assert_eq!(print(o), "['a] x y");
    let mut sort = LmSort::Term;
    assert_eq!(unsafe { lm_sort(o, &mut sort) }, LmStatus::Ok);
    assert_eq!(sort, LmSort::Command);
    unsafe { lm_object_free(o) };
}

#[test]
fn parse_errors_set_the_message() {
    let c = CString::new("(x").unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { lm_parse(c.as_ptr(), &mut out) }, LmStatus::Parse);
    assert!(out.is_null());
    assert!(last_error().contains("parse error"));
    let bad = [0xffu8, 0];
    assert_eq!(unsafe { lm_parse(bad.as_ptr() as *const c_char, &mut out) }, LmStatus::InvalidUtf8);
}

#[test]
fn null_arguments_are_rejected() {
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { lm_parse(ptr::null(), &mut out) }, LmStatus::NullArgument);
    assert_eq!(unsafe { lm_canon(ptr::null(), &mut out) }, LmStatus::NullArgument);
    let o = parse("x");
    assert_eq!(unsafe { lm_canon(o, ptr::null_mut()) }, LmStatus::NullArgument);
    unsafe {
        lm_object_free(o);
        lm_object_free(ptr::null_mut());
        lm_string_free(ptr::null_mut());
    }
}

#[test]
fn canon_and_alpha_equivalence() {
    let o = parse("(mu 'a. ['a] x) y z");
    let want = parse("mu 'c. (['a] x)['c/'a \\ y . z . #]");
    let mut c = ptr::null_mut();
    assert_eq!(unsafe { lm_canon(o, &mut c) }, LmStatus::Ok);
    let mut eq = false;
    assert_eq!(unsafe { lm_alpha_eq(c, want, &mut eq) }, LmStatus::Ok);
    assert!(eq);
    assert_eq!(unsafe { lm_alpha_eq(o, want, &mut eq) }, LmStatus::Ok);
    assert!(!eq);
    unsafe {
        lm_object_free(o);
        lm_object_free(want);
        lm_object_free(c);
    }
}

#[test]
fn reduction_budget() {
    let o = parse("(\\x. x x) (\\x. x x)");
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { lm_reduce(o, 30, false, &mut out) }, LmStatus::Budget);
    let r = parse("(['a] x)['b/'a \\ #]");
    assert_eq!(unsafe { lm_reduce(r, 30, false, &mut out) }, LmStatus::Ok);
    assert_eq!(print(out), "['b] x");
    unsafe {
        lm_object_free(out);
        lm_object_free(o);
        lm_object_free(r);
    }
}

#[test]
fn equivalence_certificates() {
    let a = parse("\\y. mu 'a. ['a] x");
    let b = parse("\\y. x");
    let mut cert = ptr::null_mut();
    assert_eq!(unsafe { lm_equiv(a, b, false, 20_000, 12, &mut cert) }, LmStatus::Ok);
    assert_eq!(take_string(cert), "theta+ @ Abs.0\n");
    let z = parse("\\y. z");
    assert_eq!(unsafe { lm_equiv(a, z, true, 20_000, 12, ptr::null_mut()) }, LmStatus::NotEquivalent);
    assert!(last_error().starts_with("NOT-WITHIN-BOUNDS"));
    unsafe {
        lm_object_free(a);
        lm_object_free(b);
        lm_object_free(z);
    }
}

#[test]
fn typechecking() {
    let o = parse("\\x:A. f x");
    let env = CString::new("f:A -> B").unwrap();
    let mut j = ptr::null_mut();
    assert_eq!(unsafe { lm_typecheck(o, env.as_ptr(), &mut j) }, LmStatus::Ok);
    assert_eq!(take_string(j), "f:A -> B |- \\x:A. f x : A -> B | ");
    let env = CString::new("f:A").unwrap();
    assert_eq!(unsafe { lm_typecheck(o, env.as_ptr(), &mut j) }, LmStatus::Type);
    unsafe { lm_object_free(o) };
}

#[test]
fn header_declares_the_interface() {
    let h = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/lmcalc.h")).unwrap();
    for f in [
        "lm_parse", "lm_print", "lm_sort", "lm_canon", "lm_reduce", "lm_alpha_eq", "lm_equiv",
        "lm_typecheck", "lm_object_free", "lm_string_free", "lm_last_error",
    ] {
        assert!(h.contains(&format!("{}(", f)), "{} missing", f);
    }
    assert!(h.contains("typedef struct LmObject LmObject;"));
    assert!(h.contains("LM_STATUS_NOT_EQUIVALENT = 7"));
}
