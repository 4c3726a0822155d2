//! The pure lambda-mu fragment: its beta and mu rules and the sigma
//! equations.

use crate::meta::{self, name_not_at_all, var_not_at_all, Supply};
use crate::syntax::*;
use crate::Error;

/// True when the object contains no explicit substitution or replacement.
pub fn is_pure(o: ObjRef<'_>) -> bool {
    match o {
        ObjRef::Term(Term::Sub(..)) | ObjRef::Command(Command::Repl(..)) => false,
        _ => o.children().into_iter().all(|(_, c)| is_pure(c)),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LmuRule {
    Beta,
    Mu,
}

impl std::fmt::Display for LmuRule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LmuRule::Beta => f.write_str("beta"),
            LmuRule::Mu => f.write_str("mu"),
        }
    }
}

pub fn lmu_redexes(o: &Object) -> Vec<(LmuRule, Path)> {
    let mut out = Vec::new();
    for p in o.as_ref().positions() {
        if let Some(ObjRef::Term(Term::App(f, _))) = o.as_ref().at(&p) {
            match **f {
                Term::Abs(..) => out.push((LmuRule::Beta, p)),
                Term::Mu(..) => out.push((LmuRule::Mu, p)),
                _ => {}
            }
        }
    }
    out
}

/// Fires a beta or mu redex at `path`. The result is renamed apart.
pub fn lmu_step(o: &Object, rule: LmuRule, path: &Path) -> Result<Object, Error> {
    let sub = o
        .as_ref()
        .at(path)
        .ok_or_else(|| Error::BadPath(path.to_string()))?;
    let new = match (rule, sub) {
        (LmuRule::Beta, ObjRef::Term(Term::App(f, u))) => match &**f {
            Term::Abs(x, _, t) => meta::substitute_term(t, x, u),
            _ => return Err(Error::NotARedex(format!("beta @ {}", path))),
        },
        (LmuRule::Mu, ObjRef::Term(Term::App(f, u))) => match &**f {
            Term::Mu(a, ann, c) => {
                let mut sup = Supply::avoiding([o.as_ref()]);
                let a2 = sup.fresh_name(a);
                let s = Stack(vec![(**u).clone()]);
                let c2 = meta::replace_command(c, &a2, a, &s);
                let ann2 = ann.as_ref().and_then(|t| t.strip_arrows(1));
                Term::Mu(a2, ann2, Box::new(c2))
            }
            _ => return Err(Error::NotARedex(format!("mu @ {}", path))),
        },
        _ => return Err(Error::NotARedex(format!("{} @ {}", rule, path))),
    };
    Ok(meta::freshen(&replace_at(o, path, Object::Term(new))?))
}

/// The classical call-with-current-continuation term
/// `\x. mu 'a. ['a] x (\y. mu 'd. ['a] y)`.
pub fn call_cc() -> Term {
    abs(
        "x",
        mu(
            "a",
            named("a", app(var("x"), abs("y", mu("d", named("a", var("y")))))),
        ),
    )
}

/// `call_cc` annotated at `((A -> B) -> A) -> A`.
pub fn call_cc_typed(a: &Type, b: &Type) -> Term {
    let ab = Type::arrow(a.clone(), b.clone());
    let x_ty = Type::arrow(ab, a.clone());
    Term::Abs(
        Var::new("x"),
        Some(x_ty),
        Box::new(Term::Mu(
            Name::new("a"),
            Some(a.clone()),
            Box::new(named(
                "a",
                app(
                    var("x"),
                    Term::Abs(
                        Var::new("y"),
                        Some(a.clone()),
                        Box::new(Term::Mu(Name::new("d"), Some(b.clone()), Box::new(named("a", var("y"))))),
                    ),
                ),
            )),
        )),
    )
}

// ---------------------------------------------------------------------------
// Sigma equations

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sigma {
    S1,
    S2,
    S3,
    S4,
    S5,
    S6,
    S7,
    S8,
}

impl Sigma {
    pub const ALL: [Sigma; 8] = [
        Sigma::S1,
        Sigma::S2,
        Sigma::S3,
        Sigma::S4,
        Sigma::S5,
        Sigma::S6,
        Sigma::S7,
        Sigma::S8,
    ];
}

impl std::fmt::Display for Sigma {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let i = Sigma::ALL.iter().position(|s| s == self).unwrap() + 1;
        write!(f, "sigma{}", i)
    }
}

fn t_abs(x: &Var, ann: &Option<Type>, b: Term) -> Term {
    Term::Abs(x.clone(), ann.clone(), Box::new(b))
}

fn t_mu(a: &Name, ann: &Option<Type>, c: Command) -> Term {
    Term::Mu(a.clone(), ann.clone(), Box::new(c))
}

fn c_named(a: &Name, t: Term) -> Command {
    Command::Named(a.clone(), Box::new(t))
}

fn vna(x: &Var, t: &Term) -> bool {
    var_not_at_all(x, ObjRef::Term(t))
}

fn nna(a: &Name, t: &Term) -> bool {
    name_not_at_all(a, ObjRef::Term(t))
}

/// Left-to-right rewrite of a sigma equation at the root of `o`.
pub fn sigma_l2r(kind: Sigma, o: ObjRef<'_>) -> Option<Object> {
    match (kind, o) {
        (Sigma::S1, ObjRef::Term(Term::App(f, v))) => {
            if let Term::Abs(y, ya, b) = &**f {
                if let Term::Abs(x, xa, t) = &**b {
                    if x != y && vna(x, v) {
                        let inner = app(t_abs(y, ya, (**t).clone()), (**v).clone());
                        return Some(Object::Term(t_abs(x, xa, inner)));
                    }
                }
            }
            None
        }
        (Sigma::S2, ObjRef::Term(Term::App(f, u))) => {
            if let Term::Abs(x, xa, b) = &**f {
                if let Term::App(t, v) = &**b {
                    if vna(x, v) {
                        let l = app(t_abs(x, xa, (**t).clone()), (**u).clone());
                        return Some(Object::Term(app(l, (**v).clone())));
                    }
                }
            }
            None
        }
        (Sigma::S3, ObjRef::Term(Term::App(f, w))) => {
            if let Term::Abs(x, xa, b) = &**f {
                if let Term::Mu(a, aa, c) = &**b {
                    if let Command::Named(bn, u) = &**c {
                        if nna(a, w) {
                            let inner = app(t_abs(x, xa, (**u).clone()), (**w).clone());
                            return Some(Object::Term(t_mu(a, aa, c_named(bn, inner))));
                        }
                    }
                }
            }
            None
        }
        (Sigma::S4, ObjRef::Command(Command::Named(a2, t))) => {
            let (a, aa, b2, b, ba, c, w, v) = match_s4(t)?;
            if nna(a, w) && nna(b, v) && b != a2 && a != b2 {
                let inner = c_named(a2, app(t_mu(a, aa, c.clone()), v.clone()));
                let outer = c_named(b2, app(t_mu(b, ba, inner), w.clone()));
                return Some(Object::Command(outer));
            }
            None
        }
        (Sigma::S5, ObjRef::Command(Command::Named(a2, t))) => {
            if let Term::App(f, v) = &**t {
                if let Term::Mu(a, aa, c1) = &**f {
                    if let Command::Named(b2, l) = &**c1 {
                        if let Term::Abs(x, xa, m) = &**l {
                            if let Term::Mu(b, ba, c) = &**m {
                                if vna(x, v) && nna(b, v) && b != a2 && a != b2 {
                                    let inner = c_named(a2, app(t_mu(a, aa, (**c).clone()), (**v).clone()));
                                    let out = c_named(b2, t_abs(x, xa, t_mu(b, ba, inner)));
                                    return Some(Object::Command(out));
                                }
                            }
                        }
                    }
                }
            }
            None
        }
        (Sigma::S6, ObjRef::Command(Command::Named(a2, t))) => {
            let (x, xa, a, aa, b2, y, ya, b, ba, c) = match_s6(t)?;
            if b != a2 && a != b2 && x != y {
                let inner = c_named(a2, t_abs(x, xa, t_mu(a, aa, c.clone())));
                let out = c_named(b2, t_abs(y, ya, t_mu(b, ba, inner)));
                return Some(Object::Command(out));
            }
            None
        }
        (Sigma::S7, ObjRef::Command(Command::Named(a, t))) => {
            if let Term::Mu(b, _, c) = &**t {
                return Some(meta::rename_name(&Object::Command((**c).clone()), b, a));
            }
            None
        }
        (Sigma::S8, ObjRef::Term(Term::Mu(a, _, c))) => {
            if let Command::Named(b, v) = &**c {
                if a == b && nna(a, v) {
                    return Some(Object::Term((**v).clone()));
                }
            }
            None
        }
        _ => None,
    }
}

#[allow(clippy::type_complexity)]
fn match_s4(t: &Term) -> Option<(&Name, &Option<Type>, &Name, &Name, &Option<Type>, &Command, &Term, &Term)> {
    if let Term::App(f, v) = t {
        if let Term::Mu(a, aa, c1) = &**f {
            if let Command::Named(b2, t2) = &**c1 {
                if let Term::App(g, w) = &**t2 {
                    if let Term::Mu(b, ba, c) = &**g {
                        return Some((a, aa, b2, b, ba, c, w, v));
                    }
                }
            }
        }
    }
    None
}

#[allow(clippy::type_complexity)]
fn match_s6(
    t: &Term,
) -> Option<(&Var, &Option<Type>, &Name, &Option<Type>, &Name, &Var, &Option<Type>, &Name, &Option<Type>, &Command)> {
    if let Term::Abs(x, xa, m) = t {
        if let Term::Mu(a, aa, c1) = &**m {
            if let Command::Named(b2, l) = &**c1 {
                if let Term::Abs(y, ya, m2) = &**l {
                    if let Term::Mu(b, ba, c) = &**m2 {
                        return Some((x, xa, a, aa, b2, y, ya, b, ba, c));
                    }
                }
            }
        }
    }
    None
}

/// Right-to-left rewrite at the root, for the equations whose left side
/// is determined by the right side (sigma 1 to 6).
pub fn sigma_r2l(kind: Sigma, o: ObjRef<'_>) -> Option<Object> {
    match (kind, o) {
        (Sigma::S1, ObjRef::Term(Term::Abs(x, xa, b))) => {
            if let Term::App(f, v) = &**b {
                if let Term::Abs(y, ya, t) = &**f {
                    if x != y && vna(x, v) {
                        let l = t_abs(y, ya, t_abs(x, xa, (**t).clone()));
                        return Some(Object::Term(app(l, (**v).clone())));
                    }
                }
            }
            None
        }
        (Sigma::S2, ObjRef::Term(Term::App(l, v))) => {
            if let Term::App(f, u) = &**l {
                if let Term::Abs(x, xa, t) = &**f {
                    if vna(x, v) {
                        let body = app((**t).clone(), (**v).clone());
                        return Some(Object::Term(app(t_abs(x, xa, body), (**u).clone())));
                    }
                }
            }
            None
        }
        (Sigma::S3, ObjRef::Term(Term::Mu(a, aa, c))) => {
            if let Command::Named(bn, t) = &**c {
                if let Term::App(f, w) = &**t {
                    if let Term::Abs(x, xa, u) = &**f {
                        if nna(a, w) {
                            let body = t_mu(a, aa, c_named(bn, (**u).clone()));
                            return Some(Object::Term(app(t_abs(x, xa, body), (**w).clone())));
                        }
                    }
                }
            }
            None
        }
        // sigma 4 to 6 are symmetric up to renaming of the metavariables.
        (Sigma::S4, _) | (Sigma::S5, _) | (Sigma::S6, _) => {
            if kind == Sigma::S5 {
                sigma5_r2l(o)
            } else {
                sigma_l2r(kind, o)
            }
        }
        _ => None,
    }
}

fn sigma5_r2l(o: ObjRef<'_>) -> Option<Object> {
    if let ObjRef::Command(Command::Named(b2, l)) = o {
        if let Term::Abs(x, xa, m) = &**l {
            if let Term::Mu(b, ba, c1) = &**m {
                if let Command::Named(a2, t) = &**c1 {
                    if let Term::App(f, v) = &**t {
                        if let Term::Mu(a, aa, c) = &**f {
                            if vna(x, v) && nna(b, v) && b != a2 && a != b2 {
                                let inner = c_named(b2, t_abs(x, xa, t_mu(b, ba, (**c).clone())));
                                let out = c_named(a2, app(t_mu(a, aa, inner), (**v).clone()));
                                return Some(Object::Command(out));
                            }
                        }
                    }
                }
            }
        }
    }
    None
}

/// One sigma rewrite in context, together with its description.
#[derive(Clone, Debug)]
pub struct SigmaStep {
    pub kind: Sigma,
    pub left_to_right: bool,
    pub path: Path,
    pub result: Object,
}

/// All single sigma rewrites of `o`, at every position and in both
/// orientations where the opposite side is determined.
pub fn sigma_instances(o: &Object) -> Vec<SigmaStep> {
    let mut out = Vec::new();
    for p in o.as_ref().positions() {
        let sub = o.as_ref().at(&p).unwrap();
        for k in Sigma::ALL {
            for l2r in [true, false] {
                let r = if l2r { sigma_l2r(k, sub) } else { sigma_r2l(k, sub) };
                if let Some(r) = r {
                    if let Ok(res) = replace_at(o, &p, r) {
                        out.push(SigmaStep {
                            kind: k,
                            left_to_right: l2r,
                            path: p.clone(),
                            result: meta::freshen(&res),
                        });
                    }
                }
            }
        }
    }
    out
}
