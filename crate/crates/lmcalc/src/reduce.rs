//! Reduction of objects with explicit operators: the four base rules,
//! linear contexts, canonical forms, the refined replacement rules and
//! meaningful steps, projection and expansion.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use rand::Rng;

use crate::meta::{self, alpha_key, fnp, Supply};
use crate::syntax::*;
use crate::Error;

/// Reduction rule tags.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rule {
    B,
    S,
    M,
    R,
    C,
    W,
    N,
    REmpty,
    RNeq1,
    NNonlin,
    WNonlin,
    CNonlin,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Rule::B => "B",
            Rule::S => "S",
            Rule::M => "M",
            Rule::R => "R",
            Rule::C => "C",
            Rule::W => "W",
            Rule::N => "N",
            Rule::REmpty => "R_empty",
            Rule::RNeq1 => "R_neq1",
            Rule::NNonlin => "N_nonlin",
            Rule::WNonlin => "W_nonlin",
            Rule::CNonlin => "C_nonlin",
        };
        f.write_str(s)
    }
}

impl Rule {
    /// Rules of the meaningful replacement step.
    pub fn is_meaningful_r(&self) -> bool {
        matches!(self, Rule::RNeq1 | Rule::NNonlin | Rule::WNonlin | Rule::CNonlin)
    }

    pub fn parse(s: &str) -> Option<Rule> {
        Some(match s {
            "B" => Rule::B,
            "S" => Rule::S,
            "M" => Rule::M,
            "R" => Rule::R,
            "C" => Rule::C,
            "W" => Rule::W,
            "N" => Rule::N,
            "R_empty" => Rule::REmpty,
            "R_neq1" => Rule::RNeq1,
            "N_nonlin" => Rule::NNonlin,
            "W_nonlin" => Rule::WNonlin,
            "C_nonlin" => Rule::CNonlin,
            _ => return None,
        })
    }
}

/// One entry of a reduction trace.
#[derive(Clone, Debug)]
pub struct TraceStep {
    pub rule: Rule,
    pub path: Path,
    pub result: Object,
}

impl fmt::Display for TraceStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} @ {} \u{21d2} {}", self.rule, self.path, self.result)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Rules B, S, M, R.
    Plain,
    /// B, S, M and the refined replacement rules; renaming replacements are
    /// inert.
    Refined,
}

// ---------------------------------------------------------------------------
// Linear contexts

/// Sort of the hole and sort of the whole context.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LinearKind {
    /// Term hole, term context.
    TT,
    /// Term hole, command context.
    TC,
    /// Command hole, command context.
    CC,
    /// Command hole, term context.
    CT,
}

impl LinearKind {
    fn sorts(&self) -> (Sort, Sort) {
        match self {
            LinearKind::TT => (Sort::Term, Sort::Term),
            LinearKind::TC => (Sort::Term, Sort::Command),
            LinearKind::CC => (Sort::Command, Sort::Command),
            LinearKind::CT => (Sort::Command, Sort::Term),
        }
    }
}

/// True when the context obtained by cutting `o|from` at `to` is linear of
/// the given kind: every step from `from` to `to` goes into a function
/// position, a binder body, the subject of an explicit operator, or the
/// body of a named term.
pub fn is_linear_path(o: &Object, from: &Path, to: &Path, kind: LinearKind) -> bool {
    let Some(rel) = from.suffix_of(to) else {
        return false;
    };
    let (hole, root) = kind.sorts();
    let (Some(r), Some(h)) = (o.as_ref().at(from), o.as_ref().at(to)) else {
        return false;
    };
    r.sort() == root && h.sort() == hole && rel.0.iter().all(|s| s.is_linear())
}

fn all_linear(p: &Path) -> bool {
    p.0.iter().all(|s| s.is_linear())
}

// ---------------------------------------------------------------------------
// Name occurrences

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Occ {
    /// `[a]t`
    Named,
    /// `c[a/b\s]`
    ReplTarget,
}

/// Free occurrences of `a` with their paths relative to `o`.
pub fn name_occurrences(o: ObjRef<'_>, a: &Name) -> Vec<(Path, Occ)> {
    let mut out = Vec::new();
    fn go(o: ObjRef<'_>, a: &Name, cur: &mut Vec<Step>, out: &mut Vec<(Path, Occ)>) {
        match o {
            ObjRef::Term(Term::Mu(b, ..)) if b == a => return,
            ObjRef::Command(Command::Named(b, _)) if b == a => out.push((Path(cur.clone()), Occ::Named)),
            ObjRef::Command(Command::Repl(_, b2, b, _, s)) => {
                if b2 == a {
                    out.push((Path(cur.clone()), Occ::ReplTarget));
                }
                if b == a {
                    cur.push(Step::ReplStack);
                    go(ObjRef::Stack(s), a, cur, out);
                    cur.pop();
                    return;
                }
            }
            _ => {}
        }
        for (s, c) in o.children() {
            cur.push(s);
            go(c, a, cur, out);
            cur.pop();
        }
    }
    go(o, a, &mut Vec::new(), &mut out);
    out
}

// ---------------------------------------------------------------------------
// Base rules

fn sub_at<'a>(o: &'a Object, p: &Path) -> Result<ObjRef<'a>, Error> {
    o.as_ref().at(p).ok_or_else(|| Error::BadPath(p.to_string()))
}

/// Strips a substitution context `L`: returns the inner term and the
/// substitutions from innermost to outermost.
fn peel_l(t: &Term) -> (&Term, Vec<(&Var, &Term)>) {
    let mut subs = Vec::new();
    let mut cur = t;
    while let Term::Sub(b, x, u) = cur {
        subs.push((x, &**u));
        cur = b;
    }
    subs.reverse();
    (cur, subs)
}

fn wrap_l(mut t: Term, subs: &[(Var, Term)]) -> Term {
    for (x, u) in subs {
        t = Term::Sub(Box::new(t), x.clone(), Box::new(u.clone()));
    }
    t
}

/// Head of `L<t>` after peeling substitutions.
fn l_head(t: &Term) -> &Term {
    peel_l(t).0
}

/// The substitution context of `f`, renamed so that no binder captures a
/// free variable of `u`. Returns the peeled head and the context.
fn open_l(f: &Term, u: &Term, sup: &mut Supply) -> (Term, Vec<(Var, Term)>) {
    let fvu = meta::fv_term(u);
    let (head, subs) = peel_l(f);
    let mut head = head.clone();
    let mut out: Vec<(Var, Term)> = Vec::new();
    // subs are innermost first; a binder y scopes over head and inner subs'
    // bodies only (not over substituted terms).
    for (y, v) in subs {
        if fvu.contains(y) {
            let z = sup.fresh_var(y);
            let zt = Term::Var(z.clone());
            head = meta::substitute_term(&head, y, &zt);
            for (_, inner) in out.iter_mut() {
                *inner = meta::substitute_term(inner, y, &zt);
            }
            out.push((z, v.clone()));
        } else {
            out.push((y.clone(), v.clone()));
        }
    }
    (head, out)
}

/// All B, S, M and R redexes in pre-order.
pub fn lm_redexes(o: &Object) -> Vec<(Rule, Path)> {
    let mut out = Vec::new();
    for p in o.as_ref().positions() {
        match o.as_ref().at(&p).unwrap() {
            ObjRef::Term(Term::App(f, _)) => match l_head(f) {
                Term::Abs(..) => out.push((Rule::B, p)),
                Term::Mu(..) => out.push((Rule::M, p)),
                _ => {}
            },
            ObjRef::Term(Term::Sub(..)) => out.push((Rule::S, p)),
            ObjRef::Command(Command::Repl(..)) => out.push((Rule::R, p)),
            _ => {}
        }
    }
    out
}

fn fire_b(o: &Object, p: &Path) -> Result<Term, Error> {
    if let ObjRef::Term(Term::App(f, u)) = sub_at(o, p)? {
        let mut sup = Supply::avoiding([o.as_ref()]);
        let (head, l) = open_l(f, u, &mut sup);
        if let Term::Abs(x, _, t) = head {
            let inner = Term::Sub(t, x, u.clone());
            return Ok(wrap_l(inner, &l));
        }
    }
    Err(Error::NotARedex(format!("B @ {}", p)))
}

fn fire_m(o: &Object, p: &Path) -> Result<Term, Error> {
    if let ObjRef::Term(Term::App(f, u)) = sub_at(o, p)? {
        let mut sup = Supply::avoiding([o.as_ref()]);
        let (head, l) = open_l(f, u, &mut sup);
        if let Term::Mu(a, ann, c) = head {
            let a2 = sup.fresh_name(&a);
            let ann2 = ann.as_ref().and_then(|t| t.strip_arrows(1));
            let c2 = Command::Repl(c, a2.clone(), a, ann, Stack(vec![(**u).clone()]));
            return Ok(wrap_l(Term::Mu(a2, ann2, Box::new(c2)), &l));
        }
    }
    Err(Error::NotARedex(format!("M @ {}", p)))
}

fn fire_s(o: &Object, p: &Path) -> Result<Term, Error> {
    if let ObjRef::Term(Term::Sub(t, x, u)) = sub_at(o, p)? {
        return Ok(meta::substitute_term(t, x, u));
    }
    Err(Error::NotARedex(format!("S @ {}", p)))
}

fn fire_r(o: &Object, p: &Path) -> Result<Command, Error> {
    if let ObjRef::Command(Command::Repl(c, a2, a, _, s)) = sub_at(o, p)? {
        let c = Object::Command((**c).clone());
        return match meta::replace_checked(&c, a2, a, s)? {
            Object::Command(c) => Ok(c),
            _ => unreachable!(),
        };
    }
    Err(Error::NotARedex(format!("R @ {}", p)))
}

fn splice(o: &Object, p: &Path, new: Object) -> Result<Object, Error> {
    Ok(meta::freshen(&replace_at(o, p, new)?))
}

/// Fires one rule at `path`. Bound identifiers of the input are renamed
/// apart first; the result is renamed apart as well.
pub fn lm_step(o: &Object, rule: Rule, path: &Path) -> Result<Object, Error> {
    let o = meta::freshen(o);
    let new = match rule {
        Rule::B => Object::Term(fire_b(&o, path)?),
        Rule::M => Object::Term(fire_m(&o, path)?),
        Rule::S => Object::Term(fire_s(&o, path)?),
        Rule::R => Object::Command(fire_r(&o, path)?),
        _ => return refined_step(&o, rule, path),
    };
    splice(&o, path, new)
}

// ---------------------------------------------------------------------------
// Refined replacement rules

/// Classification of a replacement redex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RInfo {
    pub rule: Rule,
    /// Path of the unique occurrence, relative to the body, when there is
    /// exactly one.
    pub occurrence: Option<Path>,
}

/// Classifies the replacement at `path` into the refined rules.
pub fn classify_r(o: &Object, path: &Path) -> Result<RInfo, Error> {
    let ObjRef::Command(Command::Repl(c, _, a, _, s)) = sub_at(o, path)? else {
        return Err(Error::NotARedex(format!("R @ {}", path)));
    };
    if s.is_empty() {
        return Ok(RInfo { rule: Rule::REmpty, occurrence: None });
    }
    if fnp(a, ObjRef::Command(c)) != 1 {
        return Ok(RInfo { rule: Rule::RNeq1, occurrence: None });
    }
    let occs = name_occurrences(ObjRef::Command(c), a);
    let (q, kind) = occs.into_iter().next().expect("one occurrence");
    let lin = all_linear(&q);
    let rule = match kind {
        Occ::Named => {
            if lin {
                Rule::N
            } else {
                Rule::NNonlin
            }
        }
        Occ::ReplTarget => {
            let Some(ObjRef::Command(Command::Repl(_, _, _, _, s1))) = ObjRef::Command(c).at(&q) else {
                unreachable!()
            };
            match (s1.is_empty(), lin) {
                (true, true) => Rule::W,
                (true, false) => Rule::WNonlin,
                (false, true) => Rule::C,
                (false, false) => Rule::CNonlin,
            }
        }
    };
    Ok(RInfo { rule, occurrence: Some(q) })
}

/// Right-hand side of a refined rule fired at a replacement.
fn fire_refined(o: &Object, rule: Rule, path: &Path) -> Result<Command, Error> {
    let info = classify_r(o, path)?;
    let compatible = info.rule == rule
        || (rule == Rule::R)
        || (rule == Rule::N && info.rule == Rule::NNonlin)
        || (rule == Rule::NNonlin && info.rule == Rule::N);
    if !compatible {
        return Err(Error::NotARedex(format!("{} @ {} (is {})", rule, path, info.rule)));
    }
    let ObjRef::Command(Command::Repl(c, a2, a, ann, r)) = sub_at(o, path)? else {
        unreachable!()
    };
    let body = Object::Command((**c).clone());
    match info.rule {
        Rule::REmpty | Rule::RNeq1 => fire_r(o, path),
        Rule::N | Rule::NNonlin => {
            let q = info.occurrence.unwrap();
            let Some(ObjRef::Command(Command::Named(_, t))) = body.as_ref().at(&q) else {
                unreachable!()
            };
            let new = Command::Named(a2.clone(), Box::new(apply_stack((**t).clone(), r)));
            Ok(replace_at(&body, &q, Object::Command(new))?.into_command().unwrap())
        }
        Rule::W | Rule::WNonlin => {
            let q = info.occurrence.unwrap();
            let Some(ObjRef::Command(Command::Repl(c1, _, b, bann, _))) = body.as_ref().at(&q) else {
                unreachable!()
            };
            let inner = Command::Repl(c1.clone(), a.clone(), b.clone(), bann.clone(), r.clone());
            let outer_ann = ann.as_ref().and_then(|t| t.strip_arrows(r.len()));
            let new = Command::Repl(Box::new(inner), a2.clone(), a.clone(), outer_ann, Stack::empty());
            Ok(replace_at(&body, &q, Object::Command(new))?.into_command().unwrap())
        }
        Rule::C | Rule::CNonlin => {
            let q = info.occurrence.unwrap();
            let Some(ObjRef::Command(Command::Repl(c1, _, b, bann, s1))) = body.as_ref().at(&q) else {
                unreachable!()
            };
            let new = Command::Repl(c1.clone(), a2.clone(), b.clone(), bann.clone(), s1.concat(r));
            Ok(replace_at(&body, &q, Object::Command(new))?.into_command().unwrap())
        }
        _ => unreachable!(),
    }
}

fn refined_step(o: &Object, rule: Rule, path: &Path) -> Result<Object, Error> {
    let c = fire_refined(o, rule, path)?;
    splice(o, path, Object::Command(c))
}

// ---------------------------------------------------------------------------
// Canonical forms

/// B, M, C and W redexes in pre-order.
pub fn canon_redexes(o: &Object) -> Vec<(Rule, Path)> {
    let mut out = Vec::new();
    for p in o.as_ref().positions() {
        match o.as_ref().at(&p).unwrap() {
            ObjRef::Term(Term::App(f, _)) => match l_head(f) {
                Term::Abs(..) => out.push((Rule::B, p)),
                Term::Mu(..) => out.push((Rule::M, p)),
                _ => {}
            },
            ObjRef::Command(Command::Repl(..)) => {
                if let Ok(info) = classify_r(o, &p) {
                    if matches!(info.rule, Rule::C | Rule::W) {
                        out.push((info.rule, p));
                    }
                }
            }
            _ => {}
        }
    }
    out
}

fn first_canon_redex(o: &Object) -> Option<(Rule, Path)> {
    for p in o.as_ref().positions() {
        match o.as_ref().at(&p).unwrap() {
            ObjRef::Term(Term::App(f, _)) => match l_head(f) {
                Term::Abs(..) => return Some((Rule::B, p)),
                Term::Mu(..) => return Some((Rule::M, p)),
                _ => {}
            },
            ObjRef::Command(Command::Repl(..)) => {
                if let Ok(info) = classify_r(o, &p) {
                    if matches!(info.rule, Rule::C | Rule::W) {
                        return Some((info.rule, p));
                    }
                }
            }
            _ => {}
        }
    }
    None
}

pub fn is_canonical(o: &Object) -> bool {
    first_canon_redex(o).is_none()
}

const CANON_LIMIT: usize = 1_000_000;

/// Canonical form: the B, M, C, W normal form, computed leftmost-outermost.
pub fn canon(o: &Object) -> Object {
    canon_traced(o).0
}

pub fn canon_traced(o: &Object) -> (Object, Vec<TraceStep>) {
    let mut cur = meta::freshen(o);
    let mut trace = Vec::new();
    for _ in 0..CANON_LIMIT {
        match first_canon_redex(&cur) {
            None => return (cur, trace),
            Some((rule, p)) => {
                cur = lm_step(&cur, rule, &p).expect("canonical redex fires");
                trace.push(TraceStep { rule, path: p, result: cur.clone() });
            }
        }
    }
    panic!("canonicalization did not terminate within {} steps", CANON_LIMIT)
}

/// Canonical form reached by firing a uniformly chosen redex each time.
pub fn canon_random<R: Rng>(o: &Object, rng: &mut R) -> Object {
    let mut cur = meta::freshen(o);
    for _ in 0..CANON_LIMIT {
        let rs = canon_redexes(&cur);
        if rs.is_empty() {
            return cur;
        }
        let (rule, p) = &rs[rng.gen_range(0..rs.len())];
        cur = lm_step(&cur, *rule, p).expect("canonical redex fires");
    }
    panic!("canonicalization did not terminate within {} steps", CANON_LIMIT)
}

// ---------------------------------------------------------------------------
// Meaningful steps

/// S redexes and meaningful replacement redexes of a canonical object.
pub fn meaningful_redexes(o: &Object) -> Vec<(Rule, Path)> {
    let mut out = Vec::new();
    for p in o.as_ref().positions() {
        match o.as_ref().at(&p).unwrap() {
            ObjRef::Term(Term::Sub(..)) => out.push((Rule::S, p)),
            ObjRef::Command(Command::Repl(..)) => {
                if let Ok(info) = classify_r(o, &p) {
                    if info.rule.is_meaningful_r() {
                        out.push((info.rule, p));
                    }
                }
            }
            _ => {}
        }
    }
    out
}

/// One S or meaningful replacement step followed by canonicalization.
pub fn meaningful_step(o: &Object, rule: Rule, path: &Path) -> Result<Object, Error> {
    let o = meta::freshen(o);
    let stepped = match rule {
        Rule::S => lm_step(&o, Rule::S, path)?,
        r if r.is_meaningful_r() => {
            let info = classify_r(&o, path)?;
            if info.rule != r {
                return Err(Error::NotARedex(format!("{} @ {} (is {})", r, path, info.rule)));
            }
            refined_step(&o, r, path)?
        }
        r => return Err(Error::NotARedex(format!("{} is not a meaningful rule", r))),
    };
    Ok(canon(&stepped))
}

/// All meaningful one-step reducts.
pub fn meaningful_reducts(o: &Object) -> Vec<(Rule, Path, Object)> {
    meaningful_redexes(o)
        .into_iter()
        .filter_map(|(r, p)| meaningful_step(o, r, &p).ok().map(|res| (r, p, res)))
        .collect()
}

// ---------------------------------------------------------------------------
// Normalization

fn refined_redexes(o: &Object) -> Vec<(Rule, Path)> {
    let mut out = Vec::new();
    for (r, p) in lm_redexes(o) {
        if r == Rule::R {
            if let Ok(info) = classify_r(o, &p) {
                if info.rule != Rule::REmpty {
                    out.push((info.rule, p));
                }
            }
        } else {
            out.push((r, p));
        }
    }
    out
}

/// Redexes of the given mode.
pub fn redexes(o: &Object, mode: Mode) -> Vec<(Rule, Path)> {
    match mode {
        Mode::Plain => lm_redexes(o),
        Mode::Refined => refined_redexes(o),
    }
}

/// Leftmost-outermost normalization with a step budget.
pub fn reduce_to_nf(o: &Object, budget: usize, mode: Mode) -> Result<(Object, Vec<TraceStep>), Error> {
    let mut cur = meta::freshen(o);
    let mut trace = Vec::new();
    loop {
        let rs = redexes(&cur, mode);
        let Some((rule, p)) = rs.into_iter().next() else {
            return Ok((cur, trace));
        };
        if trace.len() >= budget {
            return Err(Error::Budget(budget));
        }
        cur = lm_step(&cur, rule, &p)?;
        trace.push(TraceStep { rule, path: p, result: cur.clone() });
    }
}

/// Outcome of exploring the whole plain reduction graph.
#[derive(Debug)]
pub struct Exploration {
    pub states: usize,
    pub normal_forms: Vec<Object>,
    pub complete: bool,
}

/// Breadth-first exploration of every plain reduction sequence, with states
/// identified up to alpha-equivalence.
pub fn explore(o: &Object, max_states: usize) -> Exploration {
    let start = meta::freshen(o);
    let mut seen: HashMap<String, ()> = HashMap::new();
    let mut nfs: HashMap<String, Object> = HashMap::new();
    let mut queue = VecDeque::new();
    seen.insert(alpha_key(&start), ());
    queue.push_back(start);
    while let Some(cur) = queue.pop_front() {
        let rs = lm_redexes(&cur);
        if rs.is_empty() {
            nfs.insert(alpha_key(&cur), cur);
            continue;
        }
        for (r, p) in rs {
            let Ok(next) = lm_step(&cur, r, &p) else { continue };
            let k = alpha_key(&next);
            if seen.contains_key(&k) {
                continue;
            }
            if seen.len() >= max_states {
                return Exploration {
                    states: seen.len(),
                    normal_forms: nfs.into_values().collect(),
                    complete: false,
                };
            }
            seen.insert(k, ());
            queue.push_back(next);
        }
    }
    Exploration {
        states: seen.len(),
        normal_forms: nfs.into_values().collect(),
        complete: true,
    }
}

// ---------------------------------------------------------------------------
// Projection and expansion

fn proj_term(t: &Term) -> Term {
    match t {
        Term::Var(_) => t.clone(),
        Term::App(a, b) => app(proj_term(a), proj_term(b)),
        Term::Abs(x, ann, b) => Term::Abs(x.clone(), ann.clone(), Box::new(proj_term(b))),
        Term::Mu(a, ann, c) => Term::Mu(a.clone(), ann.clone(), Box::new(proj_command(c))),
        Term::Sub(b, x, u) => meta::substitute_term(&proj_term(b), x, &proj_term(u)),
    }
}

fn proj_command(c: &Command) -> Command {
    match c {
        Command::Named(a, t) => Command::Named(a.clone(), Box::new(proj_term(t))),
        Command::Repl(b, a2, a, _, s) => {
            let b2 = proj_command(b);
            let s2 = Stack(s.0.iter().map(proj_term).collect());
            meta::replace_command(&b2, a2, a, &s2)
        }
    }
}

/// Executes every explicit operator.
pub fn projection(o: &Object) -> Object {
    let o = meta::freshen(o);
    let r = match &o {
        Object::Term(t) => Object::Term(proj_term(t)),
        Object::Command(c) => Object::Command(proj_command(c)),
        Object::Stack(s) => Object::Stack(Stack(s.0.iter().map(proj_term).collect())),
    };
    meta::freshen(&r)
}

fn exp_term(t: &Term) -> Term {
    match t {
        Term::Var(_) => t.clone(),
        Term::App(a, b) => app(exp_term(a), exp_term(b)),
        Term::Abs(x, ann, b) => Term::Abs(x.clone(), ann.clone(), Box::new(exp_term(b))),
        Term::Mu(a, ann, c) => Term::Mu(a.clone(), ann.clone(), Box::new(exp_command(c))),
        Term::Sub(b, x, u) => app(Term::Abs(x.clone(), None, Box::new(exp_term(b))), exp_term(u)),
    }
}

fn exp_command(c: &Command) -> Command {
    match c {
        Command::Named(a, t) => Command::Named(a.clone(), Box::new(exp_term(t))),
        Command::Repl(b, a2, a, ann, s) => {
            let m = Term::Mu(a.clone(), ann.clone(), Box::new(exp_command(b)));
            let s2 = Stack(s.0.iter().map(exp_term).collect());
            Command::Named(a2.clone(), Box::new(apply_stack(m, &s2)))
        }
    }
}

/// Rewrites explicit operators back into redexes of the pure fragment.
pub fn expansion(o: &Object) -> Object {
    match o {
        Object::Term(t) => Object::Term(exp_term(t)),
        Object::Command(c) => Object::Command(exp_command(c)),
        Object::Stack(s) => Object::Stack(Stack(s.0.iter().map(exp_term).collect())),
    }
}
