//! Abstract syntax of objects: terms, commands and stacks, simple types,
//! and positions (paths) inside objects.

use std::fmt;
use std::sync::Arc;

/// Term variable.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Var(pub Arc<str>);

/// Continuation name. Printed with a leading apostrophe.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Name(pub Arc<str>);

impl Var {
    pub fn new(s: &str) -> Var {
        Var(Arc::from(s))
    }
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl Name {
    pub fn new(s: &str) -> Name {
        Name(Arc::from(s.trim_start_matches('\'')))
    }
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Display for Name {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "'{}", self.0)
    }
}

/// Simple types. Stack types are lists of types; `S -> B` for a stack type
/// `S` folds into nested arrows, with the empty stack type giving `B`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Type {
    Base(Arc<str>),
    Arrow(Box<Type>, Box<Type>),
}

impl Type {
    pub fn base(s: &str) -> Type {
        Type::Base(Arc::from(s))
    }

    pub fn arrow(a: Type, b: Type) -> Type {
        Type::Arrow(Box::new(a), Box::new(b))
    }

    /// `S -> B` for a stack type `S`.
    pub fn stack_arrow(stack: &[Type], b: Type) -> Type {
        stack
            .iter()
            .rev()
            .fold(b, |acc, a| Type::arrow(a.clone(), acc))
    }

    /// Removes `n` leading arrows; `None` if the type has fewer.
    pub fn strip_arrows(&self, n: usize) -> Option<Type> {
        let mut t = self;
        for _ in 0..n {
            match t {
                Type::Arrow(_, b) => t = b,
                Type::Base(_) => return None,
            }
        }
        Some(t.clone())
    }
}

impl fmt::Display for Type {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Type::Base(s) => f.write_str(s),
            Type::Arrow(a, b) => match **a {
                Type::Arrow(..) => write!(f, "({}) -> {}", a, b),
                Type::Base(_) => write!(f, "{} -> {}", a, b),
            },
        }
    }
}

/// Displays a stack type as `eps` or `A, B, ...`.
pub struct StackTypeDisplay<'a>(pub &'a [Type]);

impl fmt::Display for StackTypeDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("eps");
        }
        for (i, t) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            match t {
                Type::Arrow(..) => write!(f, "({})", t)?,
                Type::Base(_) => write!(f, "{}", t)?,
            }
        }
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Term {
    Var(Var),
    App(Box<Term>, Box<Term>),
    Abs(Var, Option<Type>, Box<Term>),
    Mu(Name, Option<Type>, Box<Command>),
    /// `t[x\u]`: body, bound variable, substituted term.
    Sub(Box<Term>, Var, Box<Term>),
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Command {
    Named(Name, Box<Term>),
    /// `c[a'/a\s]`: body, replacement name `a'` (free), bound name `a` with
    /// optional annotation, stack.
    Repl(Box<Command>, Name, Name, Option<Type>, Stack),
}

/// A stack `t1 . t2 . ... . #`, stored as its items.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Stack(pub Vec<Term>);

impl Stack {
    pub fn empty() -> Stack {
        Stack(Vec::new())
    }
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
    pub fn len(&self) -> usize {
        self.0.len()
    }
    pub fn concat(&self, other: &Stack) -> Stack {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        Stack(v)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Sort {
    Term,
    Command,
    Stack,
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Object {
    Term(Term),
    Command(Command),
    Stack(Stack),
}

impl Object {
    pub fn sort(&self) -> Sort {
        match self {
            Object::Term(_) => Sort::Term,
            Object::Command(_) => Sort::Command,
            Object::Stack(_) => Sort::Stack,
        }
    }

    pub fn as_ref(&self) -> ObjRef<'_> {
        match self {
            Object::Term(t) => ObjRef::Term(t),
            Object::Command(c) => ObjRef::Command(c),
            Object::Stack(s) => ObjRef::Stack(s),
        }
    }

    pub fn as_mut(&mut self) -> ObjMut<'_> {
        match self {
            Object::Term(t) => ObjMut::Term(t),
            Object::Command(c) => ObjMut::Command(c),
            Object::Stack(s) => ObjMut::Stack(s),
        }
    }

    pub fn into_term(self) -> Option<Term> {
        match self {
            Object::Term(t) => Some(t),
            _ => None,
        }
    }

    pub fn into_command(self) -> Option<Command> {
        match self {
            Object::Command(c) => Some(c),
            _ => None,
        }
    }

    /// Number of constructors.
    pub fn size(&self) -> usize {
        self.as_ref().size()
    }
}

impl From<Term> for Object {
    fn from(t: Term) -> Object {
        Object::Term(t)
    }
}

impl From<Command> for Object {
    fn from(c: Command) -> Object {
        Object::Command(c)
    }
}

impl From<Stack> for Object {
    fn from(s: Stack) -> Object {
        Object::Stack(s)
    }
}

// Smart constructors.

pub fn var(x: &str) -> Term {
    Term::Var(Var::new(x))
}

pub fn app(t: Term, u: Term) -> Term {
    Term::App(Box::new(t), Box::new(u))
}

pub fn abs(x: &str, t: Term) -> Term {
    Term::Abs(Var::new(x), None, Box::new(t))
}

pub fn mu(a: &str, c: Command) -> Term {
    Term::Mu(Name::new(a), None, Box::new(c))
}

pub fn esub(t: Term, x: &str, u: Term) -> Term {
    Term::Sub(Box::new(t), Var::new(x), Box::new(u))
}

pub fn named(a: &str, t: Term) -> Command {
    Command::Named(Name::new(a), Box::new(t))
}

pub fn erepl(c: Command, a2: &str, a: &str, s: Vec<Term>) -> Command {
    Command::Repl(Box::new(c), Name::new(a2), Name::new(a), None, Stack(s))
}

/// `t s1 ... sn`.
pub fn apply_stack(t: Term, s: &Stack) -> Term {
    s.0.iter().fold(t, |acc, u| app(acc, u.clone()))
}

/// Borrowed view of a sub-object.
#[derive(Clone, Copy, Debug)]
pub enum ObjRef<'a> {
    Term(&'a Term),
    Command(&'a Command),
    Stack(&'a Stack),
}

impl<'a> ObjRef<'a> {
    pub fn sort(&self) -> Sort {
        match self {
            ObjRef::Term(_) => Sort::Term,
            ObjRef::Command(_) => Sort::Command,
            ObjRef::Stack(_) => Sort::Stack,
        }
    }

    pub fn to_object(&self) -> Object {
        match *self {
            ObjRef::Term(t) => Object::Term(t.clone()),
            ObjRef::Command(c) => Object::Command(c.clone()),
            ObjRef::Stack(s) => Object::Stack(s.clone()),
        }
    }

    /// Immediate children with the step leading to each.
    pub fn children(&self) -> Vec<(Step, ObjRef<'a>)> {
        match *self {
            ObjRef::Term(t) => match t {
                Term::Var(_) => vec![],
                Term::App(f, a) => vec![
                    (Step::AppFun, ObjRef::Term(f)),
                    (Step::AppArg, ObjRef::Term(a)),
                ],
                Term::Abs(_, _, b) => vec![(Step::AbsBody, ObjRef::Term(b))],
                Term::Mu(_, _, c) => vec![(Step::MuBody, ObjRef::Command(c))],
                Term::Sub(b, _, u) => vec![
                    (Step::SubBody, ObjRef::Term(b)),
                    (Step::SubArg, ObjRef::Term(u)),
                ],
            },
            ObjRef::Command(c) => match c {
                Command::Named(_, t) => vec![(Step::NamedBody, ObjRef::Term(t))],
                Command::Repl(b, _, _, _, s) => vec![
                    (Step::ReplBody, ObjRef::Command(b)),
                    (Step::ReplStack, ObjRef::Stack(s)),
                ],
            },
            ObjRef::Stack(s) => s
                .0
                .iter()
                .enumerate()
                .map(|(i, t)| (Step::Item(i), ObjRef::Term(t)))
                .collect(),
        }
    }

    pub fn child(&self, step: Step) -> Option<ObjRef<'a>> {
        match (*self, step) {
            (ObjRef::Term(Term::App(f, _)), Step::AppFun) => Some(ObjRef::Term(f)),
            (ObjRef::Term(Term::App(_, a)), Step::AppArg) => Some(ObjRef::Term(a)),
            (ObjRef::Term(Term::Abs(_, _, b)), Step::AbsBody) => Some(ObjRef::Term(b)),
            (ObjRef::Term(Term::Mu(_, _, c)), Step::MuBody) => Some(ObjRef::Command(c)),
            (ObjRef::Term(Term::Sub(b, _, _)), Step::SubBody) => Some(ObjRef::Term(b)),
            (ObjRef::Term(Term::Sub(_, _, u)), Step::SubArg) => Some(ObjRef::Term(u)),
            (ObjRef::Command(Command::Named(_, t)), Step::NamedBody) => Some(ObjRef::Term(t)),
            (ObjRef::Command(Command::Repl(b, ..)), Step::ReplBody) => Some(ObjRef::Command(b)),
            (ObjRef::Command(Command::Repl(_, _, _, _, s)), Step::ReplStack) => {
                Some(ObjRef::Stack(s))
            }
            (ObjRef::Stack(s), Step::Item(i)) => s.0.get(i).map(ObjRef::Term),
            _ => None,
        }
    }

    pub fn at(&self, path: &Path) -> Option<ObjRef<'a>> {
        let mut cur = *self;
        for &s in &path.0 {
            cur = cur.child(s)?;
        }
        Some(cur)
    }

    pub fn size(&self) -> usize {
        1 + self
            .children()
            .iter()
            .map(|(_, c)| c.size())
            .sum::<usize>()
    }

    /// All positions in pre-order (outermost first, left to right).
    pub fn positions(&self) -> Vec<Path> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn go(o: ObjRef<'_>, cur: &mut Vec<Step>, out: &mut Vec<Path>) {
            out.push(Path(cur.clone()));
            for (s, c) in o.children() {
                cur.push(s);
                go(c, cur, out);
                cur.pop();
            }
        }
        go(*self, &mut cur, &mut out);
        out
    }
}

/// Mutable view of a sub-object.
pub enum ObjMut<'a> {
    Term(&'a mut Term),
    Command(&'a mut Command),
    Stack(&'a mut Stack),
}

impl<'a> ObjMut<'a> {
    pub fn child(self, step: Step) -> Option<ObjMut<'a>> {
        match (self, step) {
            (ObjMut::Term(Term::App(f, _)), Step::AppFun) => Some(ObjMut::Term(f)),
            (ObjMut::Term(Term::App(_, a)), Step::AppArg) => Some(ObjMut::Term(a)),
            (ObjMut::Term(Term::Abs(_, _, b)), Step::AbsBody) => Some(ObjMut::Term(b)),
            (ObjMut::Term(Term::Mu(_, _, c)), Step::MuBody) => Some(ObjMut::Command(c)),
            (ObjMut::Term(Term::Sub(b, _, _)), Step::SubBody) => Some(ObjMut::Term(b)),
            (ObjMut::Term(Term::Sub(_, _, u)), Step::SubArg) => Some(ObjMut::Term(u)),
            (ObjMut::Command(Command::Named(_, t)), Step::NamedBody) => Some(ObjMut::Term(t)),
            (ObjMut::Command(Command::Repl(b, ..)), Step::ReplBody) => Some(ObjMut::Command(b)),
            (ObjMut::Command(Command::Repl(_, _, _, _, s)), Step::ReplStack) => {
                Some(ObjMut::Stack(s))
            }
            (ObjMut::Stack(s), Step::Item(i)) => s.0.get_mut(i).map(ObjMut::Term),
            _ => None,
        }
    }

    pub fn at(self, path: &Path) -> Option<ObjMut<'a>> {
        let mut cur = self;
        for &s in &path.0 {
            cur = cur.child(s)?;
        }
        Some(cur)
    }

    /// Overwrites the sub-object; fails on a sort mismatch.
    pub fn set(self, new: Object) -> Result<(), crate::Error> {
        match (self, new) {
            (ObjMut::Term(slot), Object::Term(t)) => *slot = t,
            (ObjMut::Command(slot), Object::Command(c)) => *slot = c,
            (ObjMut::Stack(slot), Object::Stack(s)) => *slot = s,
            (slot, new) => {
                let have = match slot {
                    ObjMut::Term(_) => Sort::Term,
                    ObjMut::Command(_) => Sort::Command,
                    ObjMut::Stack(_) => Sort::Stack,
                };
                return Err(crate::Error::SortMismatch {
                    expected: have,
                    found: new.sort(),
                });
            }
        }
        Ok(())
    }
}

/// One step from a node to one of its children.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Step {
    AppFun,
    AppArg,
    AbsBody,
    MuBody,
    SubBody,
    SubArg,
    NamedBody,
    ReplBody,
    ReplStack,
    Item(usize),
}

impl Step {
    /// Steps allowed inside linear contexts: function position, binder
    /// bodies, the subject of an explicit operator, the body of a named term.
    pub fn is_linear(&self) -> bool {
        matches!(
            self,
            Step::AppFun
                | Step::AbsBody
                | Step::MuBody
                | Step::SubBody
                | Step::NamedBody
                | Step::ReplBody
        )
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Step::AppFun => f.write_str("App.0"),
            Step::AppArg => f.write_str("App.1"),
            Step::AbsBody => f.write_str("Abs.0"),
            Step::MuBody => f.write_str("Mu.0"),
            Step::SubBody => f.write_str("Sub.0"),
            Step::SubArg => f.write_str("Sub.1"),
            Step::NamedBody => f.write_str("Named.0"),
            Step::ReplBody => f.write_str("Repl.0"),
            Step::ReplStack => f.write_str("Repl.1"),
            Step::Item(i) => write!(f, "Stack.{}", i),
        }
    }
}

/// A position: the sequence of steps from the root.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, PartialOrd, Ord)]
pub struct Path(pub Vec<Step>);

impl Path {
    pub fn root() -> Path {
        Path(Vec::new())
    }

    pub fn push(&self, s: Step) -> Path {
        let mut v = self.0.clone();
        v.push(s);
        Path(v)
    }

    pub fn join(&self, other: &Path) -> Path {
        let mut v = self.0.clone();
        v.extend(other.0.iter().copied());
        Path(v)
    }

    pub fn is_prefix_of(&self, other: &Path) -> bool {
        other.0.len() >= self.0.len() && other.0[..self.0.len()] == self.0[..]
    }

    /// The suffix of `other` after `self`, if `self` is a prefix.
    pub fn suffix_of(&self, other: &Path) -> Option<Path> {
        if self.is_prefix_of(other) {
            Some(Path(other.0[self.0.len()..].to_vec()))
        } else {
            None
        }
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Parses the format produced by `Display`.
    pub fn parse(s: &str) -> Option<Path> {
        let s = s.trim();
        if s.is_empty() || s == "e" || s == "\u{3b5}" {
            return Some(Path::root());
        }
        let mut steps = Vec::new();
        for part in s.split('/') {
            let (tag, idx) = part.split_once('.')?;
            let idx: usize = idx.parse().ok()?;
            let step = match (tag, idx) {
                ("App", 0) => Step::AppFun,
                ("App", 1) => Step::AppArg,
                ("Abs", 0) => Step::AbsBody,
                ("Mu", 0) => Step::MuBody,
                ("Sub", 0) => Step::SubBody,
                ("Sub", 1) => Step::SubArg,
                ("Named", 0) => Step::NamedBody,
                ("Repl", 0) => Step::ReplBody,
                ("Repl", 1) => Step::ReplStack,
                ("Stack", i) => Step::Item(i),
                _ => return None,
            };
            steps.push(step);
        }
        Some(Path(steps))
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("\u{3b5}");
        }
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("/")?;
            }
            write!(f, "{}", s)?;
        }
        Ok(())
    }
}

/// Returns a copy of `o` with the sub-object at `path` replaced by `new`.
pub fn replace_at(o: &Object, path: &Path, new: Object) -> Result<Object, crate::Error> {
    let mut out = o.clone();
    let slot = out
        .as_mut()
        .at(path)
        .ok_or_else(|| crate::Error::BadPath(path.to_string()))?;
    slot.set(new)?;
    Ok(out)
}

pub fn subobject(o: &Object, path: &Path) -> Option<Object> {
    o.as_ref().at(path).map(|r| r.to_object())
}

// Printing.

impl fmt::Display for Object {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Object::Term(t) => write!(f, "{}", t),
            Object::Command(c) => write!(f, "{}", c),
            Object::Stack(s) => write!(f, "{}", s),
        }
    }
}

impl fmt::Display for ObjRef<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ObjRef::Term(t) => write!(f, "{}", t),
            ObjRef::Command(c) => write!(f, "{}", c),
            ObjRef::Stack(s) => write!(f, "{}", s),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Prec {
    Top,
    App,
    Postfix,
}

fn write_ann(f: &mut fmt::Formatter<'_>, ann: &Option<Type>) -> fmt::Result {
    if let Some(t) = ann {
        write!(f, ":{}", AnnDisplay(t))?;
    }
    Ok(())
}

struct AnnDisplay<'a>(&'a Type);

impl fmt::Display for AnnDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Type::Base(_) => write!(f, "{}", self.0),
            Type::Arrow(..) => write!(f, "({})", self.0),
        }
    }
}

fn term_prec(t: &Term) -> Prec {
    match t {
        Term::Var(_) => Prec::Postfix,
        Term::Sub(..) => Prec::Postfix,
        Term::App(..) => Prec::App,
        Term::Abs(..) | Term::Mu(..) => Prec::Top,
    }
}

fn write_term(f: &mut fmt::Formatter<'_>, t: &Term, ctx: Prec) -> fmt::Result {
    if term_prec(t) < ctx {
        f.write_str("(")?;
        write_term(f, t, Prec::Top)?;
        return f.write_str(")");
    }
    match t {
        Term::Var(x) => write!(f, "{}", x),
        Term::App(a, b) => {
            write_term(f, a, Prec::App)?;
            f.write_str(" ")?;
            write_term(f, b, Prec::Postfix)
        }
        Term::Abs(x, ann, b) => {
            write!(f, "\\{}", x)?;
            write_ann(f, ann)?;
            f.write_str(". ")?;
            write_term(f, b, Prec::Top)
        }
        Term::Mu(a, ann, c) => {
            write!(f, "mu {}", a)?;
            write_ann(f, ann)?;
            f.write_str(". ")?;
            write_command(f, c, false)
        }
        Term::Sub(b, x, u) => {
            write_term(f, b, Prec::Postfix)?;
            write!(f, "[{} \\ ", x)?;
            write_term(f, u, Prec::Top)?;
            f.write_str("]")
        }
    }
}

fn write_command(f: &mut fmt::Formatter<'_>, c: &Command, as_subject: bool) -> fmt::Result {
    match c {
        Command::Named(a, t) => {
            if as_subject {
                f.write_str("(")?;
            }
            write!(f, "[{}] ", a)?;
            write_term(f, t, Prec::Top)?;
            if as_subject {
                f.write_str(")")?;
            }
            Ok(())
        }
        Command::Repl(b, a2, a, ann, s) => {
            write_command(f, b, true)?;
            write!(f, "[{}/{}", a2, a)?;
            write_ann(f, ann)?;
            write!(f, " \\ {}]", s)
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_term(f, self, Prec::Top)
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_command(f, self, false)
    }
}

impl fmt::Display for Stack {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in &self.0 {
            match t {
                Term::Abs(..) | Term::Mu(..) => write!(f, "({}) . ", t)?,
                _ => write!(f, "{} . ", t)?,
            }
        }
        f.write_str("#")
    }
}
