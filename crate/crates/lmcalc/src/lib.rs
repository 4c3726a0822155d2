//! Lambda-mu calculus with explicit substitutions and explicit
//! replacements.
//!
//! The crate covers the syntax and meta-operations of the calculus, its
//! reduction rules and canonical forms, the strong-bisimulation
//! equivalence on canonical forms, simple types, and the translation to
//! polarized proof nets together with their cut elimination and
//! structural equivalence.

pub mod equiv;
pub mod gen;
pub mod harness;
pub mod lmu;
pub mod meta;
pub mod parse;
pub mod ppn;
pub mod reduce;
pub mod syntax;
pub mod typing;

pub use parse::{parse_command, parse_object, parse_stack, parse_term, parse_type};
pub use syntax::{Command, Name, Object, Path, Sort, Stack, Step, Term, Type, Var};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("sort mismatch: expected {expected:?}, found {found:?}")]
    SortMismatch { expected: Sort, found: Sort },
    #[error("no sub-object at path {0}")]
    BadPath(String),
    #[error("no redex {0}")]
    NotARedex(String),
    #[error("type error: {0}")]
    Type(String),
    #[error("budget of {0} exhausted")]
    Budget(usize),
    #[error("ill-formed proof net: {0}")]
    Net(String),
    #[error("{0}")]
    Other(String),
}

pub type Result<T> = std::result::Result<T, Error>;
