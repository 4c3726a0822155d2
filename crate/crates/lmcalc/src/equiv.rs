//! The equivalence on canonical forms: axiom instances, bounded
//! bidirectional search with certificates, and certificate replay.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::meta::{self, alpha_key, bound, free, Supply};
use crate::reduce::{canon, is_canonical};
use crate::syntax::*;
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AxiomKind {
    /// Moving an explicit substitution along a linear term context.
    Exs,
    /// Moving an explicit replacement along a linear command context.
    Exr,
    /// Executing a replacement on its only, linear, occurrence.
    Lin,
    /// Permuting two named mu-abstractions under lambdas.
    Pp,
    /// `[a]mu b. c` against the renaming replacement `c[a/b\#]`.
    Rho,
    /// `mu a. [a]t` against `t`.
    Theta,
    /// A renaming replacement against the implicit renaming.
    Ren,
}

impl AxiomKind {
    pub const EQUIV: [AxiomKind; 6] = [
        AxiomKind::Exs,
        AxiomKind::Exr,
        AxiomKind::Lin,
        AxiomKind::Pp,
        AxiomKind::Rho,
        AxiomKind::Theta,
    ];

    pub const WITH_REN: [AxiomKind; 7] = [
        AxiomKind::Exs,
        AxiomKind::Exr,
        AxiomKind::Lin,
        AxiomKind::Pp,
        AxiomKind::Rho,
        AxiomKind::Theta,
        AxiomKind::Ren,
    ];

    pub fn parse(s: &str) -> Option<AxiomKind> {
        Some(match s {
            "exs" => AxiomKind::Exs,
            "exr" => AxiomKind::Exr,
            "lin" => AxiomKind::Lin,
            "pp" => AxiomKind::Pp,
            "rho" => AxiomKind::Rho,
            "theta" => AxiomKind::Theta,
            "ren" => AxiomKind::Ren,
            _ => return None,
        })
    }
}

impl fmt::Display for AxiomKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AxiomKind::Exs => "exs",
            AxiomKind::Exr => "exr",
            AxiomKind::Lin => "lin",
            AxiomKind::Pp => "pp",
            AxiomKind::Rho => "rho",
            AxiomKind::Theta => "theta",
            AxiomKind::Ren => "ren",
        })
    }
}

/// One axiom application. `target` is the hole of the linear context,
/// relative to `path`, for the two moving axioms.
#[derive(Clone, Debug)]
pub struct AxiomApp {
    pub kind: AxiomKind,
    pub left_to_right: bool,
    pub path: Path,
    pub target: Option<Path>,
    pub result: Object,
}

impl AxiomApp {
    fn same_site(&self, other: &AxiomApp) -> bool {
        self.kind == other.kind
            && self.left_to_right == other.left_to_right
            && self.path == other.path
            && self.target == other.target
    }

    fn inverse_of(&self, other: &AxiomApp) -> bool {
        let orient = if self.kind == AxiomKind::Pp {
            true
        } else {
            self.left_to_right != other.left_to_right
        };
        self.kind == other.kind && orient && self.path == other.path && self.target == other.target
    }
}

impl fmt::Display for AxiomApp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let o = if self.left_to_right { '+' } else { '-' };
        write!(f, "{}{} @ {}", self.kind, o, self.path)?;
        if let Some(t) = &self.target {
            write!(f, " ~ {}", t)?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Side conditions

const HOLE: &str = "%hole";

/// The context obtained by replacing the sub-object at `q` (relative to
/// `root`) by a placeholder of the same sort.
fn context_with_hole(root: &Object, q: &Path) -> Option<Object> {
    let hole = match root.as_ref().at(q)? {
        ObjRef::Term(_) => Object::Term(Term::Var(Var::new(HOLE))),
        ObjRef::Command(_) => Object::Command(Command::Named(Name::new(HOLE), Box::new(Term::Var(Var::new(HOLE))))),
        ObjRef::Stack(_) => return None,
    };
    replace_at(root, q, hole).ok()
}

/// `x # ctx` and `u` free for `ctx`, for a variable binder moving across.
fn exs_side(ctx: &Object, x: &Var, u: &Term) -> bool {
    let cf = free(ctx.as_ref());
    let cb = bound(ctx.as_ref());
    if cf.vars.contains(x) || cb.vars.contains(x) {
        return false;
    }
    let uf = free(ObjRef::Term(u));
    uf.vars.iter().all(|y| !cb.vars.contains(y)) && uf.names.iter().all(|a| !cb.names.contains(a))
}

/// `a # ctx` and `{s, a2}` free for `ctx`.
fn exr_side(ctx: &Object, a2: &Name, a: &Name, s: &Stack) -> bool {
    let cf = free(ctx.as_ref());
    let cb = bound(ctx.as_ref());
    if cf.names.contains(a) || cb.names.contains(a) {
        return false;
    }
    if cb.names.contains(a2) {
        return false;
    }
    let sf = free(ObjRef::Stack(s));
    sf.vars.iter().all(|y| !cb.vars.contains(y)) && sf.names.iter().all(|b| !cb.names.contains(b))
}

/// Linear positions strictly below `root` (relative paths), with the sort
/// of the sub-object found there.
fn linear_positions(root: ObjRef<'_>) -> Vec<(Path, Sort)> {
    let mut out = Vec::new();
    fn go(o: ObjRef<'_>, cur: &mut Vec<Step>, out: &mut Vec<(Path, Sort)>) {
        for (s, c) in o.children() {
            if !s.is_linear() {
                continue;
            }
            cur.push(s);
            out.push((Path(cur.clone()), c.sort()));
            go(c, cur, out);
            cur.pop();
        }
    }
    go(root, &mut Vec::new(), &mut out);
    out
}

// ---------------------------------------------------------------------------
// Instances

struct Enum<'a> {
    o: &'a Object,
    include_ren: bool,
    out: Vec<AxiomApp>,
}

impl Enum<'_> {
    fn push(&mut self, kind: AxiomKind, l2r: bool, path: &Path, target: Option<Path>, new: Object) {
        let Ok(res) = replace_at(self.o, path, new) else { return };
        let res = meta::freshen(&res);
        if !is_canonical(&res) {
            return;
        }
        self.out.push(AxiomApp {
            kind,
            left_to_right: l2r,
            path: path.clone(),
            target,
            result: res,
        });
    }

    fn at(&mut self, p: &Path) {
        let sub = self.o.as_ref().at(p).unwrap();
        match sub {
            ObjRef::Term(t) => self.term_site(p, t),
            ObjRef::Command(c) => self.command_site(p, c),
            ObjRef::Stack(_) => {}
        }
    }

    fn term_site(&mut self, p: &Path, t: &Term) {
        // exs, left to right: (LTT<v>)[x\u] -> LTT<v[x\u]>
        if let Term::Sub(body, x, u) = t {
            let body_o = Object::Term((**body).clone());
            for (q, sort) in linear_positions(ObjRef::Term(body)) {
                if sort != Sort::Term {
                    continue;
                }
                let Some(ctx) = context_with_hole(&body_o, &q) else { continue };
                if !exs_side(&ctx, x, u) {
                    continue;
                }
                let v = body_o.as_ref().at(&q).unwrap().to_object().into_term().unwrap();
                let moved = Term::Sub(Box::new(v), x.clone(), u.clone());
                let new = replace_at(&body_o, &q, Object::Term(moved)).unwrap();
                self.push(AxiomKind::Exs, true, p, Some(q), new);
            }
        }
        // exs, right to left: LTT<v[x\u]> -> (LTT<v>)[x\u]
        let here = Object::Term(t.clone());
        for (q, sort) in linear_positions(ObjRef::Term(t)) {
            if sort != Sort::Term {
                continue;
            }
            if let Some(ObjRef::Term(Term::Sub(v, x, u))) = here.as_ref().at(&q) {
                let Some(ctx) = context_with_hole(&here, &q) else { continue };
                if !exs_side(&ctx, x, u) {
                    continue;
                }
                let inner = replace_at(&here, &q, Object::Term((**v).clone())).unwrap();
                let new = Term::Sub(Box::new(inner.into_term().unwrap()), x.clone(), u.clone());
                self.push(AxiomKind::Exs, false, p, Some(q), Object::Term(new));
            }
        }
        // theta: mu a. [a]t -> t
        if let Term::Mu(a, _, c) = t {
            if let Command::Named(b, u) = &**c {
                if a == b && meta::name_not_at_all(a, ObjRef::Term(u)) {
                    self.push(AxiomKind::Theta, true, p, None, Object::Term((**u).clone()));
                }
            }
        }
    }

    fn command_site(&mut self, p: &Path, c: &Command) {
        // exr, left to right
        if let Command::Repl(body, a2, a, ann, s) = c {
            let body_o = Object::Command((**body).clone());
            for (q, sort) in linear_positions(ObjRef::Command(body)) {
                if sort != Sort::Command {
                    continue;
                }
                let Some(ctx) = context_with_hole(&body_o, &q) else { continue };
                if !exr_side(&ctx, a2, a, s) {
                    continue;
                }
                let d = body_o.as_ref().at(&q).unwrap().to_object().into_command().unwrap();
                let moved = Command::Repl(Box::new(d), a2.clone(), a.clone(), ann.clone(), s.clone());
                let new = replace_at(&body_o, &q, Object::Command(moved)).unwrap();
                self.push(AxiomKind::Exr, true, p, Some(q), new);
            }
        }
        // exr, right to left
        let here = Object::Command(c.clone());
        for (q, sort) in linear_positions(ObjRef::Command(c)) {
            if sort != Sort::Command {
                continue;
            }
            if let Some(ObjRef::Command(Command::Repl(d, a2, a, ann, s))) = here.as_ref().at(&q) {
                let Some(ctx) = context_with_hole(&here, &q) else { continue };
                if !exr_side(&ctx, a2, a, s) {
                    continue;
                }
                let inner = replace_at(&here, &q, Object::Command((**d).clone())).unwrap();
                let new = Command::Repl(
                    Box::new(inner.into_command().unwrap()),
                    a2.clone(),
                    a.clone(),
                    ann.clone(),
                    s.clone(),
                );
                self.push(AxiomKind::Exr, false, p, Some(q), Object::Command(new));
            }
        }
        match c {
            Command::Repl(body, a2, a, ann, s) => {
                // lin, left to right
                if let Command::Named(b, u) = &**body {
                    if b == a && !s.is_empty() && !meta::fn_term(u).contains(a) {
                        let t = canon(&Object::Term(apply_stack((**u).clone(), s)));
                        let new = Command::Named(a2.clone(), Box::new(t.into_term().unwrap()));
                        self.push(AxiomKind::Lin, true, p, None, Object::Command(new));
                    }
                }
                if s.is_empty() {
                    // rho, right to left
                    let m = Term::Mu(a.clone(), ann.clone(), body.clone());
                    self.push(AxiomKind::Rho, false, p, None, Object::Command(Command::Named(a2.clone(), Box::new(m))));
                    // ren, explicit to implicit
                    if self.include_ren {
                        let r = meta::rename_name(&Object::Command((**body).clone()), a, a2);
                        self.push(AxiomKind::Ren, true, p, None, r);
                    }
                }
            }
            Command::Named(a2, t) => {
                // rho, left to right
                if let Term::Mu(b, ann, d) = &**t {
                    let new = Command::Repl(d.clone(), a2.clone(), b.clone(), ann.clone(), Stack::empty());
                    self.push(AxiomKind::Rho, true, p, None, Object::Command(new));
                }
                // pp
                if let Some(new) = pp_rewrite(a2, t) {
                    self.push(AxiomKind::Pp, true, p, None, Object::Command(new));
                }
                // lin, right to left, splitting an application spine
                let mut spine = Vec::new();
                let mut h = &**t;
                while let Term::App(f, x) = h {
                    spine.push((**x).clone());
                    h = f;
                }
                spine.reverse();
                if !spine.is_empty() {
                    let mut sup = Supply::avoiding([self.o.as_ref()]);
                    let fresh = sup.fresh_name(a2);
                    for k in 0..spine.len() {
                        let u = spine[..k].iter().fold(h.clone(), |acc, x| app(acc, x.clone()));
                        let s = Stack(spine[k..].to_vec());
                        let new = Command::Repl(
                            Box::new(Command::Named(fresh.clone(), Box::new(u))),
                            a2.clone(),
                            fresh.clone(),
                            None,
                            s,
                        );
                        self.push(AxiomKind::Lin, false, p, None, Object::Command(new));
                    }
                }
            }
        }
    }
}

fn pp_rewrite(a2: &Name, t: &Term) -> Option<Command> {
    let Term::Abs(x, xa, m) = t else { return None };
    let Term::Mu(a, aa, c1) = &**m else { return None };
    let Command::Named(b2, l) = &**c1 else { return None };
    let Term::Abs(y, ya, m2) = &**l else { return None };
    let Term::Mu(b, ba, u) = &**m2 else { return None };
    if a == b2 || a2 == b || x == y {
        return None;
    }
    let inner = Command::Named(
        a2.clone(),
        Box::new(Term::Abs(x.clone(), xa.clone(), Box::new(Term::Mu(a.clone(), aa.clone(), u.clone())))),
    );
    Some(Command::Named(
        b2.clone(),
        Box::new(Term::Abs(y.clone(), ya.clone(), Box::new(Term::Mu(b.clone(), ba.clone(), Box::new(inner))))),
    ))
}

/// Every single-axiom rewrite of a canonical object, at every position.
/// Results are renamed apart and canonical; rewrites that would leave the
/// canonical forms are not instances. The reverse directions of `theta`
/// and `ren` are not enumerated.
pub fn axiom_instances(o: &Object, include_ren: bool) -> Vec<AxiomApp> {
    let o = meta::freshen(o);
    let mut e = Enum {
        o: &o,
        include_ren,
        out: Vec::new(),
    };
    for p in o.as_ref().positions() {
        e.at(&p);
    }
    e.out
}

// ---------------------------------------------------------------------------
// Search

#[derive(Clone, Copy, Debug)]
pub struct Bounds {
    pub max_states: usize,
    pub max_depth: usize,
}

impl Default for Bounds {
    fn default() -> Bounds {
        Bounds {
            max_states: 20_000,
            max_depth: 12,
        }
    }
}

/// A sequence of axiom applications leading from `start` to its last
/// result.
#[derive(Clone, Debug)]
pub struct Certificate {
    pub start: Object,
    pub steps: Vec<AxiomApp>,
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            writeln!(f, "{}", s)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub enum EquivResult {
    Equivalent(Certificate),
    /// The search space reachable from both sides was exhausted without a
    /// meeting point.
    Exhausted { states: usize },
    /// Bounds reached.
    Unknown { states: usize },
}

impl EquivResult {
    pub fn is_equivalent(&self) -> bool {
        matches!(self, EquivResult::Equivalent(_))
    }
}

struct Side {
    parent: HashMap<String, Option<(String, AxiomApp)>>,
    frontier: VecDeque<(String, Object, usize)>,
}

impl Side {
    fn new(start: &Object) -> Side {
        let k = alpha_key(start);
        let mut parent = HashMap::new();
        parent.insert(k.clone(), None);
        let mut frontier = VecDeque::new();
        frontier.push_back((k, start.clone(), 0));
        Side { parent, frontier }
    }

    fn chain(&self, mut key: String) -> Vec<AxiomApp> {
        let mut out = Vec::new();
        while let Some(Some((pk, step))) = self.parent.get(&key) {
            out.push(step.clone());
            key = pk.clone();
        }
        out.reverse();
        out
    }
}

/// Searches for a proof that the canonical forms of `o` and `p` are
/// equivalent.
pub fn equiv(o: &Object, p: &Object, bounds: Bounds, include_ren: bool) -> EquivResult {
    if o.sort() != p.sort() {
        return EquivResult::Exhausted { states: 0 };
    }
    let co = canon(o);
    let cp = canon(p);
    let ko = alpha_key(&co);
    let kp = alpha_key(&cp);
    if ko == kp {
        return EquivResult::Equivalent(Certificate { start: co, steps: vec![] });
    }
    let mut sides = [Side::new(&co), Side::new(&cp)];
    let mut depth = [0usize, 0usize];
    let mut states = 2usize;
    loop {
        let can0 = !sides[0].frontier.is_empty();
        let can1 = !sides[1].frontier.is_empty();
        if !can0 && !can1 {
            return EquivResult::Exhausted { states };
        }
        if depth[0] + depth[1] >= bounds.max_depth {
            return EquivResult::Unknown { states };
        }
        let i = if !can1 || (can0 && sides[0].frontier.len() <= sides[1].frontier.len()) {
            0
        } else {
            1
        };
        let layer = depth[i];
        depth[i] += 1;
        let mut next = VecDeque::new();
        while let Some((k, obj, d)) = sides[i].frontier.pop_front() {
            debug_assert_eq!(d, layer);
            for ax in axiom_instances(&obj, include_ren) {
                let nk = alpha_key(&ax.result);
                if sides[i].parent.contains_key(&nk) {
                    continue;
                }
                sides[i].parent.insert(nk.clone(), Some((k.clone(), ax.clone())));
                states += 1;
                if sides[1 - i].parent.contains_key(&nk) {
                    let fwd = sides[0].chain(nk.clone());
                    let back = sides[1].chain(nk.clone());
                    let steps = join_chains(&co, &cp, fwd, back);
                    return EquivResult::Equivalent(Certificate { start: co, steps });
                }
                if states >= bounds.max_states {
                    return EquivResult::Unknown { states };
                }
                next.push_back((nk, ax.result, d + 1));
            }
        }
        sides[i].frontier = next;
    }
}

/// Combines `o ->* m` and `p ->* m` into `o ->* m ->* p`.
fn join_chains(_o: &Object, p: &Object, fwd: Vec<AxiomApp>, back: Vec<AxiomApp>) -> Vec<AxiomApp> {
    let mut steps = fwd;
    // back[i] goes from q_i to q_{i+1} with q_0 = p; reversed, it goes from
    // q_{i+1} to q_i.
    let mut objs = vec![p.clone()];
    for s in &back {
        objs.push(s.result.clone());
    }
    for i in (0..back.len()).rev() {
        let s = &back[i];
        steps.push(AxiomApp {
            kind: s.kind,
            left_to_right: if s.kind == AxiomKind::Pp { true } else { !s.left_to_right },
            path: s.path.clone(),
            target: s.target.clone(),
            result: objs[i].clone(),
        });
    }
    steps
}

/// Replays a certificate from `start` and checks that it ends at an object
/// alpha-equivalent to `end`. Each step must either be an enumerated
/// instance of the current object or the inverse of an enumerated
/// instance of its result.
pub fn check_certificate(cert: &Certificate, end: &Object, include_ren: bool) -> Result<(), Error> {
    let mut cur = meta::freshen(&cert.start);
    for (i, step) in cert.steps.iter().enumerate() {
        let fwd_ok = axiom_instances(&cur, include_ren)
            .iter()
            .any(|a| a.same_site(step) && meta::alpha_eq(&a.result, &step.result));
        let ok = fwd_ok
            || axiom_instances(&step.result, include_ren)
                .iter()
                .any(|a| a.inverse_of(step) && meta::alpha_eq(&a.result, &cur));
        if !ok {
            return Err(Error::Other(format!("certificate step {} ({}) does not apply", i, step)));
        }
        cur = step.result.clone();
    }
    if meta::alpha_eq(&cur, &canon(end)) {
        Ok(())
    } else {
        Err(Error::Other(format!("certificate ends at {}, not at {}", cur, end)))
    }
}

/// Whether `o` and `p` are related by a single axiom instance (either
/// direction).
pub fn one_axiom_apart(o: &Object, p: &Object, include_ren: bool) -> Option<AxiomApp> {
    let kp = alpha_key(p);
    axiom_instances(o, include_ren)
        .into_iter()
        .find(|a| alpha_key(&a.result) == kp)
}
