//! Polarized formulas.

use std::fmt;
use std::sync::Arc;

use crate::syntax::Type;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Atom(Arc<str>),
    NegAtom(Arc<str>),
    Par(Box<Formula>, Box<Formula>),
    Tensor(Box<Formula>, Box<Formula>),
    Quest(Box<Formula>),
    Bang(Box<Formula>),
}

impl Formula {
    pub fn neg(&self) -> Formula {
        match self {
            Formula::Atom(a) => Formula::NegAtom(a.clone()),
            Formula::NegAtom(a) => Formula::Atom(a.clone()),
            Formula::Par(a, b) => Formula::Tensor(Box::new(a.neg()), Box::new(b.neg())),
            Formula::Tensor(a, b) => Formula::Par(Box::new(a.neg()), Box::new(b.neg())),
            Formula::Quest(a) => Formula::Bang(Box::new(a.neg())),
            Formula::Bang(a) => Formula::Quest(Box::new(a.neg())),
        }
    }

    pub fn is_positive(&self) -> bool {
        matches!(self, Formula::NegAtom(_) | Formula::Tensor(..) | Formula::Bang(_))
    }

    pub fn par(a: Formula, b: Formula) -> Formula {
        Formula::Par(Box::new(a), Box::new(b))
    }

    pub fn tensor(a: Formula, b: Formula) -> Formula {
        Formula::Tensor(Box::new(a), Box::new(b))
    }

    pub fn quest(a: Formula) -> Formula {
        Formula::Quest(Box::new(a))
    }

    pub fn bang(a: Formula) -> Formula {
        Formula::Bang(Box::new(a))
    }

    /// Output formulas: `i` and `?Q par O`.
    pub fn is_output(&self) -> bool {
        match self {
            Formula::Atom(_) => true,
            Formula::Par(q, o) => matches!(&**q, Formula::Quest(q) if q.is_anti_output()) && o.is_output(),
            _ => false,
        }
    }

    /// Anti-output formulas: `i^` and `!O tensor Q`.
    pub fn is_anti_output(&self) -> bool {
        match self {
            Formula::NegAtom(_) => true,
            Formula::Tensor(o, q) => matches!(&**o, Formula::Bang(o) if o.is_output()) && q.is_anti_output(),
            _ => false,
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Atom(a) => write!(f, "{}", a),
            Formula::NegAtom(a) => write!(f, "{}^", a),
            Formula::Par(a, b) => write!(f, "({} par {})", a, b),
            Formula::Tensor(a, b) => write!(f, "({} tensor {})", a, b),
            Formula::Quest(a) => write!(f, "?{}", a),
            Formula::Bang(a) => write!(f, "!{}", a),
        }
    }
}

/// `[i] = i`, `[A -> B] = ?([A]^) par [B]`.
pub fn trans_type(t: &Type) -> Formula {
    match t {
        Type::Base(b) => Formula::Atom(b.clone()),
        Type::Arrow(a, b) => Formula::par(Formula::quest(trans_type(a).neg()), trans_type(b)),
    }
}

/// `[eps]_B = [B]`, `[A . S]_B = ?([A]^) par [S]_B`.
pub fn trans_stack_type(s: &[Type], b: &Type) -> Formula {
    match s.split_first() {
        None => trans_type(b),
        Some((a, rest)) => Formula::par(Formula::quest(trans_type(a).neg()), trans_stack_type(rest, b)),
    }
}
