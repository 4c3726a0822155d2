//! Meta-level operations: free and bound identifiers, fresh names,
//! capture-avoiding substitution, implicit renaming, replacement,
//! alpha-equivalence and renaming apart.

use std::collections::BTreeSet;

use crate::syntax::{apply_stack, Command, Name, ObjRef, Object, Stack, Term, Type, Var};
use crate::Error;

// ---------------------------------------------------------------------------
// Free and bound identifiers

#[derive(Default, Debug, Clone)]
pub struct Idents {
    pub vars: BTreeSet<Var>,
    pub names: BTreeSet<Name>,
}

fn free_term(t: &Term, bv: &mut Vec<Var>, bn: &mut Vec<Name>, out: &mut Idents) {
    match t {
        Term::Var(x) => {
            if !bv.contains(x) {
                out.vars.insert(x.clone());
            }
        }
        Term::App(a, b) => {
            free_term(a, bv, bn, out);
            free_term(b, bv, bn, out);
        }
        Term::Abs(x, _, b) => {
            bv.push(x.clone());
            free_term(b, bv, bn, out);
            bv.pop();
        }
        Term::Mu(a, _, c) => {
            bn.push(a.clone());
            free_command(c, bv, bn, out);
            bn.pop();
        }
        Term::Sub(b, x, u) => {
            free_term(u, bv, bn, out);
            bv.push(x.clone());
            free_term(b, bv, bn, out);
            bv.pop();
        }
    }
}

fn free_command(c: &Command, bv: &mut Vec<Var>, bn: &mut Vec<Name>, out: &mut Idents) {
    match c {
        Command::Named(a, t) => {
            if !bn.contains(a) {
                out.names.insert(a.clone());
            }
            free_term(t, bv, bn, out);
        }
        Command::Repl(b, a2, a, _, s) => {
            if !bn.contains(a2) {
                out.names.insert(a2.clone());
            }
            free_stack(s, bv, bn, out);
            bn.push(a.clone());
            free_command(b, bv, bn, out);
            bn.pop();
        }
    }
}

fn free_stack(s: &Stack, bv: &mut Vec<Var>, bn: &mut Vec<Name>, out: &mut Idents) {
    for t in &s.0 {
        free_term(t, bv, bn, out);
    }
}

/// Free variables and free names.
pub fn free(o: ObjRef<'_>) -> Idents {
    let mut out = Idents::default();
    let (mut bv, mut bn) = (Vec::new(), Vec::new());
    match o {
        ObjRef::Term(t) => free_term(t, &mut bv, &mut bn, &mut out),
        ObjRef::Command(c) => free_command(c, &mut bv, &mut bn, &mut out),
        ObjRef::Stack(s) => free_stack(s, &mut bv, &mut bn, &mut out),
    }
    out
}

pub fn fv(o: ObjRef<'_>) -> BTreeSet<Var> {
    free(o).vars
}

pub fn fnames(o: ObjRef<'_>) -> BTreeSet<Name> {
    free(o).names
}

pub fn fv_term(t: &Term) -> BTreeSet<Var> {
    fv(ObjRef::Term(t))
}

pub fn fn_term(t: &Term) -> BTreeSet<Name> {
    fnames(ObjRef::Term(t))
}

pub fn fn_command(c: &Command) -> BTreeSet<Name> {
    fnames(ObjRef::Command(c))
}

pub fn fv_stack(s: &Stack) -> BTreeSet<Var> {
    fv(ObjRef::Stack(s))
}

pub fn fn_stack(s: &Stack) -> BTreeSet<Name> {
    fnames(ObjRef::Stack(s))
}

/// Every identifier occurring anywhere, bound or free.
pub fn all_idents(o: ObjRef<'_>) -> Idents {
    let mut out = Idents::default();
    fn go(o: ObjRef<'_>, out: &mut Idents) {
        match o {
            ObjRef::Term(Term::Var(x)) => {
                out.vars.insert(x.clone());
            }
            ObjRef::Term(Term::Abs(x, ..)) | ObjRef::Term(Term::Sub(_, x, _)) => {
                out.vars.insert(x.clone());
            }
            ObjRef::Term(Term::Mu(a, ..)) | ObjRef::Command(Command::Named(a, _)) => {
                out.names.insert(a.clone());
            }
            ObjRef::Command(Command::Repl(_, a2, a, _, _)) => {
                out.names.insert(a2.clone());
                out.names.insert(a.clone());
            }
            _ => {}
        }
        for (_, c) in o.children() {
            go(c, out);
        }
    }
    go(o, &mut out);
    out
}

/// Bound variables and bound names (binders occurring in the object).
pub fn bound(o: ObjRef<'_>) -> Idents {
    let mut out = Idents::default();
    fn go(o: ObjRef<'_>, out: &mut Idents) {
        match o {
            ObjRef::Term(Term::Abs(x, ..)) | ObjRef::Term(Term::Sub(_, x, _)) => {
                out.vars.insert(x.clone());
            }
            ObjRef::Term(Term::Mu(a, ..)) | ObjRef::Command(Command::Repl(_, _, a, _, _)) => {
                out.names.insert(a.clone());
            }
            _ => {}
        }
        for (_, c) in o.children() {
            go(c, out);
        }
    }
    go(o, &mut out);
    out
}

/// `x # o`: the variable neither occurs free nor is bound in `o`.
pub fn var_not_at_all(x: &Var, o: ObjRef<'_>) -> bool {
    !fv(o).contains(x) && !bound(o).vars.contains(x)
}

/// `a # o` for names.
pub fn name_not_at_all(a: &Name, o: ObjRef<'_>) -> bool {
    !fnames(o).contains(a) && !bound(o).names.contains(a)
}

/// Number of free occurrences of `a` in `o`, counting both named terms
/// `[a]t` and replacement names `c[a/b\s]`.
pub fn fnp(a: &Name, o: ObjRef<'_>) -> usize {
    match o {
        ObjRef::Term(Term::Mu(b, _, c)) => {
            if b == a {
                0
            } else {
                fnp(a, ObjRef::Command(c))
            }
        }
        ObjRef::Term(Term::Sub(b, _, u)) => fnp(a, ObjRef::Term(b)) + fnp(a, ObjRef::Term(u)),
        ObjRef::Command(Command::Named(b, t)) => (b == a) as usize + fnp(a, ObjRef::Term(t)),
        ObjRef::Command(Command::Repl(c, b2, b, _, s)) => {
            let inner = if b == a { 0 } else { fnp(a, ObjRef::Command(c)) };
            inner + (b2 == a) as usize + fnp(a, ObjRef::Stack(s))
        }
        _ => o.children().into_iter().map(|(_, c)| fnp(a, c)).sum(),
    }
}

// ---------------------------------------------------------------------------
// Fresh identifiers

/// Source of identifiers distinct from every identifier registered so far.
#[derive(Default, Debug, Clone)]
pub struct Supply {
    used: Idents,
}

fn base_of(s: &str) -> &str {
    let b = s.trim_end_matches(|c: char| c.is_ascii_digit());
    if b.is_empty() {
        "v"
    } else {
        b
    }
}

impl Supply {
    pub fn new() -> Supply {
        Supply::default()
    }

    pub fn avoiding<'a>(objs: impl IntoIterator<Item = ObjRef<'a>>) -> Supply {
        let mut s = Supply::new();
        for o in objs {
            s.register(o);
        }
        s
    }

    pub fn register(&mut self, o: ObjRef<'_>) {
        let ids = all_idents(o);
        self.used.vars.extend(ids.vars);
        self.used.names.extend(ids.names);
    }

    pub fn reserve_var(&mut self, x: &Var) {
        self.used.vars.insert(x.clone());
    }

    pub fn reserve_name(&mut self, a: &Name) {
        self.used.names.insert(a.clone());
    }

    pub fn var_used(&self, x: &Var) -> bool {
        self.used.vars.contains(x)
    }

    pub fn name_used(&self, a: &Name) -> bool {
        self.used.names.contains(a)
    }

    pub fn fresh_var(&mut self, hint: &Var) -> Var {
        let base = base_of(hint.as_str()).to_string();
        for i in 1.. {
            let v = Var::new(&format!("{}{}", base, i));
            if !self.used.vars.contains(&v) {
                self.used.vars.insert(v.clone());
                return v;
            }
        }
        unreachable!()
    }

    pub fn fresh_name(&mut self, hint: &Name) -> Name {
        let base = base_of(hint.as_str()).to_string();
        for i in 1.. {
            let v = Name::new(&format!("{}{}", base, i));
            if !self.used.names.contains(&v) {
                self.used.names.insert(v.clone());
                return v;
            }
        }
        unreachable!()
    }
}

// ---------------------------------------------------------------------------
// Renaming to fresh identifiers (no capture possible)

fn ren_var_term(t: &Term, y: &Var, z: &Var) -> Term {
    match t {
        Term::Var(x) => Term::Var(if x == y { z.clone() } else { x.clone() }),
        Term::App(a, b) => Term::App(Box::new(ren_var_term(a, y, z)), Box::new(ren_var_term(b, y, z))),
        Term::Abs(x, ann, b) => {
            if x == y {
                t.clone()
            } else {
                Term::Abs(x.clone(), ann.clone(), Box::new(ren_var_term(b, y, z)))
            }
        }
        Term::Mu(a, ann, c) => Term::Mu(a.clone(), ann.clone(), Box::new(ren_var_command(c, y, z))),
        Term::Sub(b, x, u) => {
            let b2 = if x == y { (**b).clone() } else { ren_var_term(b, y, z) };
            Term::Sub(Box::new(b2), x.clone(), Box::new(ren_var_term(u, y, z)))
        }
    }
}

fn ren_var_command(c: &Command, y: &Var, z: &Var) -> Command {
    match c {
        Command::Named(a, t) => Command::Named(a.clone(), Box::new(ren_var_term(t, y, z))),
        Command::Repl(b, a2, a, ann, s) => Command::Repl(
            Box::new(ren_var_command(b, y, z)),
            a2.clone(),
            a.clone(),
            ann.clone(),
            Stack(s.0.iter().map(|t| ren_var_term(t, y, z)).collect()),
        ),
    }
}

fn ren_name_term(t: &Term, b: &Name, z: &Name) -> Term {
    match t {
        Term::Var(_) => t.clone(),
        Term::App(f, a) => Term::App(Box::new(ren_name_term(f, b, z)), Box::new(ren_name_term(a, b, z))),
        Term::Abs(x, ann, body) => Term::Abs(x.clone(), ann.clone(), Box::new(ren_name_term(body, b, z))),
        Term::Mu(a, ann, c) => {
            if a == b {
                t.clone()
            } else {
                Term::Mu(a.clone(), ann.clone(), Box::new(ren_name_command(c, b, z)))
            }
        }
        Term::Sub(body, x, u) => Term::Sub(
            Box::new(ren_name_term(body, b, z)),
            x.clone(),
            Box::new(ren_name_term(u, b, z)),
        ),
    }
}

fn ren_name_command(c: &Command, b: &Name, z: &Name) -> Command {
    let pick = |a: &Name| if a == b { z.clone() } else { a.clone() };
    match c {
        Command::Named(a, t) => Command::Named(pick(a), Box::new(ren_name_term(t, b, z))),
        Command::Repl(body, a2, a, ann, s) => {
            let body2 = if a == b { (**body).clone() } else { ren_name_command(body, b, z) };
            Command::Repl(
                Box::new(body2),
                pick(a2),
                a.clone(),
                ann.clone(),
                Stack(s.0.iter().map(|t| ren_name_term(t, b, z)).collect()),
            )
        }
    }
}

// ---------------------------------------------------------------------------
// Substitution

struct SubstCx<'a> {
    x: &'a Var,
    u: &'a Term,
    fvu: BTreeSet<Var>,
    fnu: BTreeSet<Name>,
    sup: Supply,
}

impl SubstCx<'_> {
    fn term(&mut self, t: &Term) -> Term {
        match t {
            Term::Var(y) => {
                if y == self.x {
                    self.u.clone()
                } else {
                    t.clone()
                }
            }
            Term::App(a, b) => Term::App(Box::new(self.term(a)), Box::new(self.term(b))),
            Term::Abs(y, ann, b) => {
                if y == self.x {
                    return t.clone();
                }
                let (y, b) = self.open_var(y, b);
                Term::Abs(y, ann.clone(), Box::new(self.term(&b)))
            }
            Term::Mu(a, ann, c) => {
                let (a, c) = self.open_name_c(a, c);
                Term::Mu(a, ann.clone(), Box::new(self.command(&c)))
            }
            Term::Sub(b, y, v) => {
                let v2 = self.term(v);
                if y == self.x {
                    return Term::Sub(b.clone(), y.clone(), Box::new(v2));
                }
                let (y, b) = self.open_var(y, b);
                Term::Sub(Box::new(self.term(&b)), y, Box::new(v2))
            }
        }
    }

    fn command(&mut self, c: &Command) -> Command {
        match c {
            Command::Named(a, t) => Command::Named(a.clone(), Box::new(self.term(t))),
            Command::Repl(b, a2, a, ann, s) => {
                let s2 = self.stack(s);
                let (a, b) = self.open_name_c(a, b);
                Command::Repl(Box::new(self.command(&b)), a2.clone(), a, ann.clone(), s2)
            }
        }
    }

    fn stack(&mut self, s: &Stack) -> Stack {
        Stack(s.0.iter().map(|t| self.term(t)).collect())
    }

    fn open_var(&mut self, y: &Var, b: &Term) -> (Var, Term) {
        if self.fvu.contains(y) {
            let z = self.sup.fresh_var(y);
            let b2 = ren_var_term(b, y, &z);
            (z, b2)
        } else {
            (y.clone(), b.clone())
        }
    }

    fn open_name_c(&mut self, a: &Name, c: &Command) -> (Name, Command) {
        if self.fnu.contains(a) {
            let z = self.sup.fresh_name(a);
            (z.clone(), ren_name_command(c, a, &z))
        } else {
            (a.clone(), c.clone())
        }
    }
}

/// Capture-avoiding substitution `o{x\u}`.
pub fn substitute(o: &Object, x: &Var, u: &Term) -> Object {
    let f = free(ObjRef::Term(u));
    let mut cx = SubstCx {
        x,
        u,
        fvu: f.vars,
        fnu: f.names,
        sup: Supply::avoiding([o.as_ref(), ObjRef::Term(u)]),
    };
    match o {
        Object::Term(t) => Object::Term(cx.term(t)),
        Object::Command(c) => Object::Command(cx.command(c)),
        Object::Stack(s) => Object::Stack(cx.stack(s)),
    }
}

pub fn substitute_term(t: &Term, x: &Var, u: &Term) -> Term {
    match substitute(&Object::Term(t.clone()), x, u) {
        Object::Term(t) => t,
        _ => unreachable!(),
    }
}

// ---------------------------------------------------------------------------
// Implicit renaming o{b -> a}

struct RenameCx<'a> {
    from: &'a Name,
    to: &'a Name,
    sup: Supply,
}

impl RenameCx<'_> {
    fn pick(&self, a: &Name) -> Name {
        if a == self.from {
            self.to.clone()
        } else {
            a.clone()
        }
    }

    fn open(&mut self, a: &Name, c: &Command) -> (Name, Command) {
        if a == self.to {
            let z = self.sup.fresh_name(a);
            (z.clone(), ren_name_command(c, a, &z))
        } else {
            (a.clone(), c.clone())
        }
    }

    fn term(&mut self, t: &Term) -> Term {
        match t {
            Term::Var(_) => t.clone(),
            Term::App(a, b) => Term::App(Box::new(self.term(a)), Box::new(self.term(b))),
            Term::Abs(x, ann, b) => Term::Abs(x.clone(), ann.clone(), Box::new(self.term(b))),
            Term::Mu(a, ann, c) => {
                if a == self.from {
                    return t.clone();
                }
                let (a, c) = self.open(a, c);
                Term::Mu(a, ann.clone(), Box::new(self.command(&c)))
            }
            Term::Sub(b, x, u) => {
                Term::Sub(Box::new(self.term(b)), x.clone(), Box::new(self.term(u)))
            }
        }
    }

    fn command(&mut self, c: &Command) -> Command {
        match c {
            Command::Named(a, t) => Command::Named(self.pick(a), Box::new(self.term(t))),
            Command::Repl(b, a2, a, ann, s) => {
                let s2 = Stack(s.0.iter().map(|t| self.term(t)).collect());
                let a2n = self.pick(a2);
                if a == self.from {
                    return Command::Repl(b.clone(), a2n, a.clone(), ann.clone(), s2);
                }
                let (a, b) = self.open(a, b);
                Command::Repl(Box::new(self.command(&b)), a2n, a, ann.clone(), s2)
            }
        }
    }
}

/// Implicit renaming `o{from -> to}` of free occurrences, capture-avoiding.
pub fn rename_name(o: &Object, from: &Name, to: &Name) -> Object {
    if from == to {
        return o.clone();
    }
    let mut sup = Supply::avoiding([o.as_ref()]);
    sup.reserve_name(to);
    let mut cx = RenameCx { from, to, sup };
    match o {
        Object::Term(t) => Object::Term(cx.term(t)),
        Object::Command(c) => Object::Command(cx.command(c)),
        Object::Stack(s) => Object::Stack(Stack(s.0.iter().map(|t| cx.term(t)).collect())),
    }
}

// ---------------------------------------------------------------------------
// Replacement {a'/a\s}o

struct ReplCx<'a> {
    a2: &'a Name,
    a: &'a Name,
    s: &'a Stack,
    fvs: BTreeSet<Var>,
    /// fn(s) together with a and a'.
    fns: BTreeSet<Name>,
    sup: Supply,
}

impl ReplCx<'_> {
    fn open_var(&mut self, y: &Var, b: &Term) -> (Var, Term) {
        if self.fvs.contains(y) {
            let z = self.sup.fresh_var(y);
            (z.clone(), ren_var_term(b, y, &z))
        } else {
            (y.clone(), b.clone())
        }
    }

    fn open_name(&mut self, b: &Name, c: &Command) -> (Name, Command) {
        if self.fns.contains(b) {
            let z = self.sup.fresh_name(b);
            (z.clone(), ren_name_command(c, b, &z))
        } else {
            (b.clone(), c.clone())
        }
    }

    fn term(&mut self, t: &Term) -> Term {
        match t {
            Term::Var(_) => t.clone(),
            Term::App(f, u) => Term::App(Box::new(self.term(f)), Box::new(self.term(u))),
            Term::Abs(x, ann, b) => {
                let (x, b) = self.open_var(x, b);
                Term::Abs(x, ann.clone(), Box::new(self.term(&b)))
            }
            Term::Mu(b, ann, c) => {
                if b == self.a {
                    return t.clone();
                }
                let (b, c) = self.open_name(b, c);
                Term::Mu(b, ann.clone(), Box::new(self.command(&c)))
            }
            Term::Sub(b, x, u) => {
                let u2 = self.term(u);
                let (x, b) = self.open_var(x, b);
                Term::Sub(Box::new(self.term(&b)), x, Box::new(u2))
            }
        }
    }

    fn stack(&mut self, s: &Stack) -> Stack {
        Stack(s.0.iter().map(|t| self.term(t)).collect())
    }

    fn command(&mut self, c: &Command) -> Command {
        match c {
            Command::Named(b, t) => {
                let t2 = self.term(t);
                if b == self.a {
                    Command::Named(self.a2.clone(), Box::new(apply_stack(t2, self.s)))
                } else {
                    Command::Named(b.clone(), Box::new(t2))
                }
            }
            Command::Repl(body, b, g, ann, s1) => {
                let s1r = self.stack(s1);
                let (g, body2) = if g == self.a {
                    (g.clone(), (**body).clone())
                } else {
                    let (g, body) = self.open_name(g, body);
                    let body2 = self.command(&body);
                    (g, body2)
                };
                if b != self.a {
                    return Command::Repl(Box::new(body2), b.clone(), g, ann.clone(), s1r);
                }
                if s1.is_empty() && !self.s.is_empty() {
                    // Renaming replacement blocked by a non-empty stack: go
                    // through a fresh intermediate name.
                    let bf = self.sup.fresh_name(self.a);
                    let bf_ann = ann.as_ref().and_then(|t| t.strip_arrows(self.s.len()));
                    let inner = Command::Repl(Box::new(body2), bf.clone(), g, ann.clone(), self.s.clone());
                    Command::Repl(Box::new(inner), self.a2.clone(), bf, bf_ann, Stack::empty())
                } else if s1.is_empty() {
                    Command::Repl(Box::new(body2), self.a2.clone(), g, ann.clone(), Stack::empty())
                } else {
                    Command::Repl(Box::new(body2), self.a2.clone(), g, ann.clone(), s1r.concat(self.s))
                }
            }
        }
    }
}

/// Replacement `{a2/a\s}o`: every free `[a]t` becomes `[a2](t s)`, and
/// explicit replacements targeting `a` absorb `s`. Requires `a != a2` and
/// `a` not free in `s`.
pub fn replace(o: &Object, a2: &Name, a: &Name, s: &Stack) -> Object {
    let f = free(ObjRef::Stack(s));
    let mut fns = f.names;
    fns.insert(a.clone());
    fns.insert(a2.clone());
    let mut sup = Supply::avoiding([o.as_ref(), ObjRef::Stack(s)]);
    sup.reserve_name(a2);
    sup.reserve_name(a);
    let mut cx = ReplCx {
        a2,
        a,
        s,
        fvs: f.vars,
        fns,
        sup,
    };
    match o {
        Object::Term(t) => Object::Term(cx.term(t)),
        Object::Command(c) => Object::Command(cx.command(c)),
        Object::Stack(st) => Object::Stack(cx.stack(st)),
    }
}

/// [`replace`] with its preconditions checked.
pub fn replace_checked(o: &Object, a2: &Name, a: &Name, s: &Stack) -> Result<Object, Error> {
    if a == a2 {
        return Err(Error::Other(format!("replacement of {} by itself", a)));
    }
    if fn_stack(s).contains(a) {
        return Err(Error::Other(format!("{} occurs free in the stack", a)));
    }
    Ok(replace(o, a2, a, s))
}

pub fn replace_command(c: &Command, a2: &Name, a: &Name, s: &Stack) -> Command {
    match replace(&Object::Command(c.clone()), a2, a, s) {
        Object::Command(c) => c,
        _ => unreachable!(),
    }
}

// ---------------------------------------------------------------------------
// Renaming apart and alpha-equivalence

struct Renamer<F: FnMut(&mut Supply, Binder<'_>) -> String> {
    vars: Vec<(Var, Var)>,
    names: Vec<(Name, Name)>,
    sup: Supply,
    choose: F,
    keep_ann: bool,
}

/// The binder being renamed, passed to the naming policy.
pub enum Binder<'a> {
    Var(&'a Var),
    Name(&'a Name),
}

impl<F: FnMut(&mut Supply, Binder<'_>) -> String> Renamer<F> {
    fn lookup_var(&self, x: &Var) -> Var {
        self.vars
            .iter()
            .rev()
            .find(|(a, _)| a == x)
            .map(|(_, b)| b.clone())
            .unwrap_or_else(|| x.clone())
    }

    fn lookup_name(&self, x: &Name) -> Name {
        self.names
            .iter()
            .rev()
            .find(|(a, _)| a == x)
            .map(|(_, b)| b.clone())
            .unwrap_or_else(|| x.clone())
    }

    fn ann(&self, a: &Option<Type>) -> Option<Type> {
        if self.keep_ann {
            a.clone()
        } else {
            None
        }
    }

    fn bind_var(&mut self, x: &Var) -> Var {
        let n = Var::new(&(self.choose)(&mut self.sup, Binder::Var(x)));
        self.sup.reserve_var(&n);
        self.vars.push((x.clone(), n.clone()));
        n
    }

    fn bind_name(&mut self, a: &Name) -> Name {
        let n = Name::new(&(self.choose)(&mut self.sup, Binder::Name(a)));
        self.sup.reserve_name(&n);
        self.names.push((a.clone(), n.clone()));
        n
    }

    fn term(&mut self, t: &Term) -> Term {
        match t {
            Term::Var(x) => Term::Var(self.lookup_var(x)),
            Term::App(a, b) => Term::App(Box::new(self.term(a)), Box::new(self.term(b))),
            Term::Abs(x, ann, b) => {
                let n = self.bind_var(x);
                let b2 = self.term(b);
                self.vars.pop();
                Term::Abs(n, self.ann(ann), Box::new(b2))
            }
            Term::Mu(a, ann, c) => {
                let n = self.bind_name(a);
                let c2 = self.command(c);
                self.names.pop();
                Term::Mu(n, self.ann(ann), Box::new(c2))
            }
            Term::Sub(b, x, u) => {
                let n = self.bind_var(x);
                let b2 = self.term(b);
                self.vars.pop();
                let u2 = self.term(u);
                Term::Sub(Box::new(b2), n, Box::new(u2))
            }
        }
    }

    fn command(&mut self, c: &Command) -> Command {
        match c {
            Command::Named(a, t) => Command::Named(self.lookup_name(a), Box::new(self.term(t))),
            Command::Repl(b, a2, a, ann, s) => {
                let a2n = self.lookup_name(a2);
                let n = self.bind_name(a);
                let b2 = self.command(b);
                self.names.pop();
                let s2 = self.stack(s);
                Command::Repl(Box::new(b2), a2n, n, self.ann(ann), s2)
            }
        }
    }

    fn stack(&mut self, s: &Stack) -> Stack {
        Stack(s.0.iter().map(|t| self.term(t)).collect())
    }

    fn object(&mut self, o: &Object) -> Object {
        match o {
            Object::Term(t) => Object::Term(self.term(t)),
            Object::Command(c) => Object::Command(self.command(c)),
            Object::Stack(s) => Object::Stack(self.stack(s)),
        }
    }
}

/// Renames binders apart: afterwards every binder is distinct from every
/// other binder and from every free identifier. Binders keep their name
/// when it is not already taken.
pub fn freshen(o: &Object) -> Object {
    let f = free(o.as_ref());
    let mut sup = Supply::new();
    for x in &f.vars {
        sup.reserve_var(x);
    }
    for a in &f.names {
        sup.reserve_name(a);
    }
    let mut r = Renamer {
        vars: Vec::new(),
        names: Vec::new(),
        sup,
        keep_ann: true,
        choose: |sup: &mut Supply, b: Binder<'_>| match b {
            Binder::Var(x) => {
                if sup.var_used(x) {
                    sup.fresh_var(x).as_str().to_string()
                } else {
                    x.as_str().to_string()
                }
            }
            Binder::Name(a) => {
                if sup.name_used(a) {
                    sup.fresh_name(a).as_str().to_string()
                } else {
                    a.as_str().to_string()
                }
            }
        },
    };
    r.object(o)
}

/// True when binders are pairwise distinct and distinct from free
/// identifiers.
pub fn is_renamed_apart(o: ObjRef<'_>) -> bool {
    let f = free(o);
    let mut seen_v = f.vars;
    let mut seen_n = f.names;
    fn go(o: ObjRef<'_>, sv: &mut BTreeSet<Var>, sn: &mut BTreeSet<Name>) -> bool {
        let ok = match o {
            ObjRef::Term(Term::Abs(x, ..)) | ObjRef::Term(Term::Sub(_, x, _)) => sv.insert(x.clone()),
            ObjRef::Term(Term::Mu(a, ..)) | ObjRef::Command(Command::Repl(_, _, a, _, _)) => {
                sn.insert(a.clone())
            }
            _ => true,
        };
        ok && o.children().into_iter().all(|(_, c)| go(c, sv, sn))
    }
    go(o, &mut seen_v, &mut seen_n)
}

/// Canonical representative of the alpha-class: binders are numbered in
/// pre-order and type annotations are dropped.
pub fn alpha_canon(o: &Object) -> Object {
    let mut nv = 0usize;
    let mut nn = 0usize;
    let mut r = Renamer {
        vars: Vec::new(),
        names: Vec::new(),
        sup: Supply::new(),
        keep_ann: false,
        choose: move |_: &mut Supply, b: Binder<'_>| match b {
            Binder::Var(_) => {
                nv += 1;
                format!("%{}", nv)
            }
            Binder::Name(_) => {
                nn += 1;
                format!("%{}", nn)
            }
        },
    };
    r.object(o)
}

/// String key identifying the alpha-class of an object.
pub fn alpha_key(o: &Object) -> String {
    alpha_canon(o).to_string()
}

/// Syntactic identity up to renaming of bound identifiers. Type
/// annotations are ignored.
pub fn alpha_eq(a: &Object, b: &Object) -> bool {
    a.sort() == b.sort() && alpha_canon(a) == alpha_canon(b)
}

pub fn alpha_eq_term(a: &Term, b: &Term) -> bool {
    alpha_eq(&Object::Term(a.clone()), &Object::Term(b.clone()))
}
