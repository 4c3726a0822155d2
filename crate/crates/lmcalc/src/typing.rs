//! Simple types for annotated objects.
//!
//! Checking is syntax-directed. Binders of abstractions, mu-abstractions
//! and explicit replacements carry annotations; the type of an explicit
//! substitution is read off its argument. Judgments are relevant: the
//! variable context of a judgment is exactly the free variables of its
//! subject, and likewise for names.

use std::collections::BTreeMap;
use std::fmt;

use crate::meta;
use crate::syntax::*;
use crate::Error;

pub type VarCtx = BTreeMap<Var, Type>;
pub type NameCtx = BTreeMap<Name, Type>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum JType {
    Term(Type),
    Command,
    Stack(Vec<Type>),
}

impl fmt::Display for JType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            JType::Term(t) => write!(f, "{}", t),
            JType::Command => f.write_str("cmd"),
            JType::Stack(s) => write!(f, "{}", StackTypeDisplay(s)),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TRule {
    Ax,
    App,
    Abs,
    Mu,
    Name,
    Sub,
    Repl,
    StackEmpty,
    StackPush,
}

/// A typing derivation. Every node records its subject and judgment.
#[derive(Clone, Debug)]
pub struct Derivation {
    pub rule: TRule,
    pub subject: Object,
    pub gamma: VarCtx,
    pub delta: NameCtx,
    pub ty: JType,
    pub premises: Vec<Derivation>,
}

impl Derivation {
    pub fn term_type(&self) -> Option<&Type> {
        match &self.ty {
            JType::Term(t) => Some(t),
            _ => None,
        }
    }

    /// `x1:A1, ... |- o : T | a1:B1, ...`
    pub fn judgment(&self) -> String {
        let g: Vec<String> = self.gamma.iter().map(|(x, t)| format!("{}:{}", x, t)).collect();
        let d: Vec<String> = self.delta.iter().map(|(a, t)| format!("{}:{}", a, t)).collect();
        format!("{} |- {} : {} | {}", g.join(", "), self.subject, self.ty, d.join(", "))
    }
}

fn restrict_vars(env: &VarCtx, o: ObjRef<'_>) -> VarCtx {
    let f = meta::fv(o);
    env.iter()
        .filter(|(x, _)| f.contains(*x))
        .map(|(x, t)| (x.clone(), t.clone()))
        .collect()
}

fn restrict_names(env: &NameCtx, o: ObjRef<'_>) -> NameCtx {
    let f = meta::fnames(o);
    env.iter()
        .filter(|(a, _)| f.contains(*a))
        .map(|(a, t)| (a.clone(), t.clone()))
        .collect()
}

struct Checker {
    gamma: VarCtx,
    delta: NameCtx,
}

impl Checker {
    fn node(&self, rule: TRule, subject: Object, ty: JType, premises: Vec<Derivation>) -> Derivation {
        let gamma = restrict_vars(&self.gamma, subject.as_ref());
        let delta = restrict_names(&self.delta, subject.as_ref());
        Derivation { rule, subject, gamma, delta, ty, premises }
    }

    fn with_var<T>(&mut self, x: &Var, t: Type, f: impl FnOnce(&mut Self) -> T) -> T {
        let old = self.gamma.insert(x.clone(), t);
        let r = f(self);
        match old {
            Some(o) => self.gamma.insert(x.clone(), o),
            None => self.gamma.remove(x),
        };
        r
    }

    fn with_name<T>(&mut self, a: &Name, t: Type, f: impl FnOnce(&mut Self) -> T) -> T {
        let old = self.delta.insert(a.clone(), t);
        let r = f(self);
        match old {
            Some(o) => self.delta.insert(a.clone(), o),
            None => self.delta.remove(a),
        };
        r
    }

    fn term(&mut self, t: &Term) -> Result<Derivation, Error> {
        let subj = Object::Term(t.clone());
        match t {
            Term::Var(x) => {
                let ty = self
                    .gamma
                    .get(x)
                    .cloned()
                    .ok_or_else(|| Error::Type(format!("unbound variable {}", x)))?;
                Ok(self.node(TRule::Ax, subj, JType::Term(ty), vec![]))
            }
            Term::App(f, u) => {
                let df = self.term(f)?;
                let du = self.term(u)?;
                let (a, b) = match df.term_type() {
                    Some(Type::Arrow(a, b)) => ((**a).clone(), (**b).clone()),
                    Some(other) => {
                        return Err(Error::Type(format!("{} has type {}, not a function", f, other)))
                    }
                    None => unreachable!(),
                };
                if du.term_type() != Some(&a) {
                    return Err(Error::Type(format!(
                        "argument {} has type {}, expected {}",
                        u,
                        du.ty,
                        a
                    )));
                }
                Ok(self.node(TRule::App, subj, JType::Term(b), vec![df, du]))
            }
            Term::Abs(x, ann, b) => {
                let a = ann
                    .clone()
                    .ok_or_else(|| Error::Type(format!("missing annotation on \\{}", x)))?;
                let db = self.with_var(x, a.clone(), |cx| cx.term(b))?;
                let bt = db.term_type().unwrap().clone();
                Ok(self.node(TRule::Abs, subj, JType::Term(Type::arrow(a, bt)), vec![db]))
            }
            Term::Mu(al, ann, c) => {
                let a = ann
                    .clone()
                    .ok_or_else(|| Error::Type(format!("missing annotation on mu {}", al)))?;
                let dc = self.with_name(al, a.clone(), |cx| cx.command(c))?;
                Ok(self.node(TRule::Mu, subj, JType::Term(a), vec![dc]))
            }
            Term::Sub(b, x, u) => {
                let du = self.term(u)?;
                let bt = du.term_type().unwrap().clone();
                let db = self.with_var(x, bt, |cx| cx.term(b))?;
                let ty = db.ty.clone();
                Ok(self.node(TRule::Sub, subj, ty, vec![db, du]))
            }
        }
    }

    fn command(&mut self, c: &Command) -> Result<Derivation, Error> {
        let subj = Object::Command(c.clone());
        match c {
            Command::Named(a, t) => {
                let dt = self.term(t)?;
                let want = self
                    .delta
                    .get(a)
                    .cloned()
                    .ok_or_else(|| Error::Type(format!("unbound name {}", a)))?;
                if dt.term_type() != Some(&want) {
                    return Err(Error::Type(format!(
                        "{} has type {} but {} expects {}",
                        t, dt.ty, a, want
                    )));
                }
                Ok(self.node(TRule::Name, subj, JType::Command, vec![dt]))
            }
            Command::Repl(b, a2, a, ann, s) => {
                let ta = ann
                    .clone()
                    .ok_or_else(|| Error::Type(format!("missing annotation on bound name {}", a)))?;
                let ds = self.stack(s)?;
                let JType::Stack(st) = &ds.ty else { unreachable!() };
                let b2 = self
                    .delta
                    .get(a2)
                    .cloned()
                    .ok_or_else(|| Error::Type(format!("unbound name {}", a2)))?;
                if Type::stack_arrow(st, b2.clone()) != ta {
                    return Err(Error::Type(format!(
                        "{} is annotated {} but the stack gives {}",
                        a,
                        ta,
                        Type::stack_arrow(st, b2)
                    )));
                }
                let db = self.with_name(a, ta, |cx| cx.command(b))?;
                Ok(self.node(TRule::Repl, subj, JType::Command, vec![db, ds]))
            }
        }
    }

    fn stack(&mut self, s: &Stack) -> Result<Derivation, Error> {
        // Build right to left so that every suffix has its own node.
        let mut d = self.node(TRule::StackEmpty, Object::Stack(Stack::empty()), JType::Stack(vec![]), vec![]);
        for i in (0..s.len()).rev() {
            let dt = self.term(&s.0[i])?;
            let JType::Stack(rest) = &d.ty else { unreachable!() };
            let mut st = vec![dt.term_type().unwrap().clone()];
            st.extend(rest.iter().cloned());
            let subj = Object::Stack(Stack(s.0[i..].to_vec()));
            d = self.node(TRule::StackPush, subj, JType::Stack(st), vec![dt, d]);
        }
        Ok(d)
    }
}

/// Checks an annotated object. `gamma` and `delta` give types to free
/// identifiers; entries for identifiers that do not occur are ignored.
pub fn check(o: &Object, gamma: &VarCtx, delta: &NameCtx) -> Result<Derivation, Error> {
    let mut cx = Checker {
        gamma: gamma.clone(),
        delta: delta.clone(),
    };
    let f = meta::free(o.as_ref());
    for x in &f.vars {
        if !gamma.contains_key(x) {
            return Err(Error::Type(format!("no type given for free variable {}", x)));
        }
    }
    for a in &f.names {
        if !delta.contains_key(a) {
            return Err(Error::Type(format!("no type given for free name {}", a)));
        }
    }
    match o {
        Object::Term(t) => cx.term(t),
        Object::Command(c) => cx.command(c),
        Object::Stack(s) => cx.stack(s),
    }
}

/// Parses `x:A, 'a:B -> C, ...`.
pub fn parse_env(src: &str) -> Result<(VarCtx, NameCtx), Error> {
    let mut g = VarCtx::new();
    let mut d = NameCtx::new();
    // Split on commas at parenthesis depth zero.
    let mut depth = 0i32;
    let mut parts = Vec::new();
    let mut cur = String::new();
    for ch in src.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if ch == ',' && depth == 0 {
            parts.push(std::mem::take(&mut cur));
        } else {
            cur.push(ch);
        }
    }
    parts.push(cur);
    for part in parts {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let (id, ty) = part
            .split_once(':')
            .ok_or_else(|| Error::Other(format!("expected ident:type, got {:?}", part)))?;
        let ty = crate::parse::parse_type(ty)?;
        let id = id.trim();
        if let Some(n) = id.strip_prefix('\'') {
            d.insert(Name::new(n), ty);
        } else {
            g.insert(Var::new(id), ty);
        }
    }
    Ok((g, d))
}
