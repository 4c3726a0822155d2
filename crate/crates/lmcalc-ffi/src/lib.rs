//! C interface to `lmcalc`.
//!
//! Objects cross the boundary as opaque `LmObject` handles and strings as
//! NUL-terminated UTF-8. Every fallible function returns an `LmStatus` and
//! writes its result through an out-pointer; on failure a message is kept
//! per thread and read with `lm_last_error`. Handles are released with
//! `lm_object_free`, returned strings with `lm_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use lmcalc::equiv::{self, Bounds, EquivResult};
use lmcalc::reduce::{self, Mode};
use lmcalc::{meta, typing, Error, Object, Sort};

/// Opaque handle to a parsed object.
pub struct LmObject(Object);

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LmStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Sort = 4,
    Type = 5,
    Budget = 6,
    NotEquivalent = 7,
    Internal = 8,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LmSort {
    Term = 0,
    Command = 1,
    Stack = 2,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let s = CString::new(msg.into().replace('\0', " ")).unwrap();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(s));
}

fn fail(status: LmStatus, msg: impl Into<String>) -> LmStatus {
    set_error(msg);
    status
}

fn status_of(e: &Error) -> LmStatus {
    match e {
        Error::Parse { .. } => LmStatus::Parse,
        Error::SortMismatch { .. } => LmStatus::Sort,
        Error::Type(_) => LmStatus::Type,
        Error::Budget(_) => LmStatus::Budget,
        _ => LmStatus::Internal,
    }
}

fn from_error(e: Error) -> LmStatus {
    fail(status_of(&e), e.to_string())
}

/// Runs `f`, turning panics into `Internal`.
fn guard(f: impl FnOnce() -> LmStatus) -> LmStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(p) => {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".to_string());
            fail(LmStatus::Internal, msg)
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char) -> Result<&'a str, LmStatus> {
    if p.is_null() {
        return Err(fail(LmStatus::NullArgument, "null string argument"));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|e| fail(LmStatus::InvalidUtf8, e.to_string()))
}

unsafe fn obj_arg<'a>(p: *const LmObject) -> Result<&'a Object, LmStatus> {
    if p.is_null() {
        return Err(fail(LmStatus::NullArgument, "null object handle"));
    }
    Ok(&(*p).0)
}

unsafe fn put_obj(out: *mut *mut LmObject, o: Object) -> LmStatus {
    *out = Box::into_raw(Box::new(LmObject(o)));
    LmStatus::Ok
}

unsafe fn put_str(out: *mut *mut c_char, s: String) -> LmStatus {
    *out = CString::new(s.replace('\0', " ")).unwrap().into_raw();
    LmStatus::Ok
}

macro_rules! try_ffi {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

macro_rules! check_out {
    ($($p:ident),+) => {
        $(if $p.is_null() {
            return fail(LmStatus::NullArgument, concat!("null out-pointer ", stringify!($p)));
        })+
    };
}

/// Message of the last failure on this thread, or NULL. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn lm_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Parses a term, command or stack.
///
/// # Safety
/// `src` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lm_parse(src: *const c_char, out: *mut *mut LmObject) -> LmStatus {
    check_out!(out);
    guard(|| {
        let s = try_ffi!(str_arg(src));
        match lmcalc::parse_object(s) {
            Ok(o) => put_obj(out, o),
            Err(e) => from_error(e),
        }
    })
}

/// Prints an object in the concrete syntax. Free the result with
/// `lm_string_free`.
///
/// # Safety
/// `obj` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lm_print(obj: *const LmObject, out: *mut *mut c_char) -> LmStatus {
    check_out!(out);
    guard(|| {
        let o = try_ffi!(obj_arg(obj));
        put_str(out, o.to_string())
    })
}

/// # Safety
/// `obj` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lm_sort(obj: *const LmObject, out: *mut LmSort) -> LmStatus {
    check_out!(out);
    guard(|| {
        let o = try_ffi!(obj_arg(obj));
        *out = match o.sort() {
            Sort::Term => LmSort::Term,
            Sort::Command => LmSort::Command,
            Sort::Stack => LmSort::Stack,
        };
        LmStatus::Ok
    })
}

/// Canonical form, as a new handle.
///
/// # Safety
/// `obj` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lm_canon(obj: *const LmObject, out: *mut *mut LmObject) -> LmStatus {
    check_out!(out);
    guard(|| {
        let o = try_ffi!(obj_arg(obj));
        put_obj(out, reduce::canon(o))
    })
}

/// Leftmost-outermost normal form within `budget` steps. `refined`
/// selects the refined replacement rules.
///
/// # Safety
/// `obj` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lm_reduce(obj: *const LmObject, budget: usize, refined: bool, out: *mut *mut LmObject) -> LmStatus {
    check_out!(out);
    guard(|| {
        let o = try_ffi!(obj_arg(obj));
        let mode = if refined { Mode::Refined } else { Mode::Plain };
        match reduce::reduce_to_nf(o, budget, mode) {
            Ok((nf, _)) => put_obj(out, nf),
            Err(e) => from_error(e),
        }
    })
}

/// # Safety
/// `a` and `b` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lm_alpha_eq(a: *const LmObject, b: *const LmObject, out: *mut bool) -> LmStatus {
    check_out!(out);
    guard(|| {
        let (a, b) = (try_ffi!(obj_arg(a)), try_ffi!(obj_arg(b)));
        *out = meta::alpha_eq(a, b);
        LmStatus::Ok
    })
}

/// Searches for an equivalence certificate between the canonical forms of
/// `a` and `b`. Returns `LM_STATUS_OK` and the certificate text (one axiom
/// step per line) when one is found, `LM_STATUS_NOT_EQUIVALENT` when the
/// bounds are reached or the search space is exhausted. `certificate` may
/// be NULL.
///
/// # Safety
/// `a` and `b` must be live handles; `certificate` must be NULL or valid.
#[no_mangle]
pub unsafe extern "C" fn lm_equiv(
    a: *const LmObject,
    b: *const LmObject,
    include_ren: bool,
    max_states: usize,
    max_depth: usize,
    certificate: *mut *mut c_char,
) -> LmStatus {
    guard(|| {
        let (a, b) = (try_ffi!(obj_arg(a)), try_ffi!(obj_arg(b)));
        let bounds = Bounds { max_states, max_depth };
        match equiv::equiv(a, b, bounds, include_ren) {
            EquivResult::Equivalent(c) => {
                if let Err(e) = equiv::check_certificate(&c, b, include_ren) {
                    return fail(LmStatus::Internal, e.to_string());
                }
                if !certificate.is_null() {
                    put_str(certificate, c.to_string());
                }
                LmStatus::Ok
            }
            EquivResult::Exhausted { states } | EquivResult::Unknown { states } => {
                fail(LmStatus::NotEquivalent, format!("NOT-WITHIN-BOUNDS ({} states)", states))
            }
        }
    })
}

/// Typechecks an annotated object under `env` (`x:A, 'a:B -> C`) and
/// returns its judgment.
///
/// # Safety
/// `obj` must be a live handle, `env` a NUL-terminated string and `out` a
/// valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lm_typecheck(obj: *const LmObject, env: *const c_char, out: *mut *mut c_char) -> LmStatus {
    check_out!(out);
    guard(|| {
        let o = try_ffi!(obj_arg(obj));
        let env = try_ffi!(str_arg(env));
        let (g, d) = match typing::parse_env(env) {
            Ok(v) => v,
            Err(e) => return fail(LmStatus::Parse, e.to_string()),
        };
        match typing::check(o, &g, &d) {
            Ok(der) => put_str(out, der.judgment()),
            Err(e) => from_error(e),
        }
    })
}

/// Releases a handle. NULL is ignored.
///
/// # Safety
/// `obj` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lm_object_free(obj: *mut LmObject) {
    if !obj.is_null() {
        drop(Box::from_raw(obj));
    }
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must be NULL or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lm_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
