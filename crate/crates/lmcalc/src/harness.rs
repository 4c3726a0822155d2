//! Property drivers behind the `lmtool` checks and the acceptance suite.
//!
//! Every driver is deterministic in its seed and returns a [`Report`]
//! whose text ends with a `PASS` or `FAIL` line.

use std::collections::BTreeMap;
use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::equiv::{self, AxiomKind, Bounds};
use crate::gen::{Env, Gen, Typed};
use crate::lmu::{lmu_redexes, Sigma};
use crate::meta::{self, alpha_eq};
use crate::ppn;
use crate::reduce::{self, Rule};
use crate::syntax::*;
use crate::typing::check;

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub title: String,
    pub cases: usize,
    pub notes: Vec<String>,
    pub failures: Vec<String>,
}

impl Report {
    pub fn new(title: &str) -> Report {
        Report {
            title: title.to_string(),
            ..Report::default()
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn fail(&mut self, msg: String) {
        self.failures.push(msg);
    }

    /// One-line summary.
    pub fn summary(&self) -> String {
        format!(
            "{}: {} cases, {} failures{}",
            self.title,
            self.cases,
            self.failures.len(),
            if self.notes.is_empty() {
                String::new()
            } else {
                format!(" ({})", self.notes.join("; "))
            }
        )
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.title)?;
        writeln!(f, "cases: {}", self.cases)?;
        for n in &self.notes {
            writeln!(f, "{}", n)?;
        }
        for (i, m) in self.failures.iter().enumerate().take(20) {
            writeln!(f, "failure {}:\n{}", i + 1, m)?;
        }
        if self.failures.len() > 20 {
            writeln!(f, "... {} more failures", self.failures.len() - 20)?;
        }
        write!(f, "{}", if self.passed() { "PASS" } else { "FAIL" })
    }
}

fn histogram<K: fmt::Display + Ord>(h: &BTreeMap<K, usize>) -> String {
    h.iter().map(|(k, v)| format!("{}={}", k, v)).collect::<Vec<_>>().join(" ")
}

// ---------------------------------------------------------------------------
// Strong bisimulation

fn equivalent(a: &Object, b: &Object, bounds: Bounds) -> bool {
    alpha_eq(a, b) || equiv::equiv(a, b, bounds, false).is_equivalent()
}

/// A step of one side that no step of the other side matches.
struct Unmatched {
    path: Path,
    text: String,
}

fn match_steps(o: &Object, p: &Object, bounds: Bounds, right: bool) -> Result<usize, Unmatched> {
    let ps = reduce::meaningful_reducts(p);
    let mut n = 0;
    for (r, path, o2) in reduce::meaningful_reducts(o) {
        n += 1;
        let found = ps.iter().any(|(_, _, p2)| alpha_eq(&o2, p2))
            || ps.iter().any(|(_, _, p2)| equiv::one_axiom_apart(&o2, p2, false).is_some())
            || ps.iter().any(|(_, _, p2)| equivalent(&o2, p2, bounds));
        if !found {
            let cands: Vec<String> = ps.iter().map(|(r, q, p2)| format!("    {} @ {} => {}", r, q, p2)).collect();
            let text = format!(
                "  {} side: {} @ {} => {}\n  unmatched among {} reducts of the other side:\n{}",
                if right { "right" } else { "left" },
                r,
                path,
                o2,
                ps.len(),
                cands.join("\n")
            );
            return Err(Unmatched { path, text });
        }
    }
    Ok(n)
}

fn transfer(o: &Object, p: &Object, bounds: Bounds) -> Result<usize, Unmatched> {
    let a = match_steps(o, p, bounds, false)?;
    let b = match_steps(p, o, bounds, true)?;
    Ok(a + b)
}

/// Checks both directions of the transfer property for one pair. Returns
/// the number of matched steps.
pub fn bisim_pair(o: &Object, p: &Object, bounds: Bounds) -> Result<usize, String> {
    transfer(o, p, bounds).map_err(|u| u.text)
}

/// Whether an unmatched step of a lin pair fires inside the rewritten
/// subobject, on either side, rather than in the surrounding context.
fn inside_lin_site(ax: &equiv::AxiomApp, u: &Unmatched) -> bool {
    ax.kind == AxiomKind::Lin && ax.path.is_prefix_of(&u.path)
}

/// Generated one-axiom pairs, cycling through the six axioms.
pub fn bisim_check(seed: u64, cases: usize, size: usize, bounds: Bounds) -> Report {
    let mut rep = Report::new("strong bisimulation of meaningful reduction");
    let mut g = Gen::new(seed);
    let mut per: BTreeMap<AxiomKind, usize> = BTreeMap::new();
    let mut steps = 0;
    let mut in_lin = 0;
    for i in 0..cases {
        let k = AxiomKind::EQUIV[i % AxiomKind::EQUIV.len()];
        let Some((t, ax)) = g.equiv_pair(k, size, false) else {
            rep.fail(format!("no {} pair could be generated", k));
            continue;
        };
        rep.cases += 1;
        *per.entry(k).or_default() += 1;
        match transfer(&t.obj, &ax.result, bounds) {
            Ok(n) => steps += n,
            Err(u) => {
                if inside_lin_site(&ax, &u) {
                    in_lin += 1;
                }
                rep.fail(format!("{} pair\n  o = {}\n  p = {}\n{}", k, t.obj, ax.result, u.text))
            }
        }
    }
    rep.notes.push(format!("pairs per axiom: {}", histogram(&per)));
    rep.notes.push(format!("matched steps: {}", steps));
    if in_lin > 0 {
        rep.notes.push(format!(
            "{} of the failures are lin pairs whose unmatched step lies inside the rewritten subobject",
            in_lin
        ));
    }
    rep
}

/// `(mu a.[a]x) y` against `x y`: one step on the left, none on the right.
pub fn sigma8_counterexample() -> Report {
    let mut rep = Report::new("sigma8 is not a strong bisimulation");
    let x = Term::Var(Var::new("x"));
    let y = Term::Var(Var::new("y"));
    let left = Object::Term(app(mu("a", named("a", x.clone())), y.clone()));
    let right = Object::Term(app(x, y));
    rep.cases = 1;
    let related = crate::lmu::sigma_instances(&left)
        .iter()
        .any(|st| st.kind == Sigma::S8 && alpha_eq(&st.result, &right));
    let (l, r) = (lmu_redexes(&left).len(), lmu_redexes(&right).len());
    rep.notes.push(format!("{} has {} redex(es), {} has {}", left, l, right, r));
    if !related {
        rep.fail("the pair is not a sigma8 instance".into());
    }
    if (l, r) != (1, 0) {
        rep.fail(format!("expected redex counts 1 and 0, got {} and {}", l, r));
    }
    rep
}

// ---------------------------------------------------------------------------
// Sigma correspondence

pub fn sigma_correspondence(seed: u64, per_kind: usize, size: usize, bounds: Bounds) -> Report {
    let mut rep = Report::new("sigma instances are equivalent after canonicalization");
    let mut g = Gen::new(seed);
    for k in Sigma::ALL {
        for _ in 0..per_kind {
            let (o, p) = g.sigma_pair(k, size);
            rep.cases += 1;
            let (co, cp) = (reduce::canon(&o), reduce::canon(&p));
            match equiv::equiv(&co, &cp, bounds, true) {
                equiv::EquivResult::Equivalent(c) => {
                    if let Err(e) = equiv::check_certificate(&c, &cp, true) {
                        rep.fail(format!("{}: bad certificate for {} vs {}: {}", k, co, cp, e));
                    }
                }
                other => rep.fail(format!("{}: {}  vs  {}\n  canon: {}  vs  {}\n  {:?}", k, o, p, co, cp, other)),
            }
        }
    }
    rep
}

// ---------------------------------------------------------------------------
// Confluence

/// Explores every plain reduction sequence of generated typed terms.
/// Terms whose graph exceeds `max_states` are skipped and counted.
pub fn confluence_check(seed: u64, cases: usize, size: usize, max_states: usize) -> Report {
    let mut rep = Report::new("confluence of plain reduction");
    let mut g = Gen::new(seed);
    let mut skipped = 0;
    let mut states = 0;
    while rep.cases < cases && skipped <= 10 * cases {
        let t = g.typed_term(size);
        let ex = reduce::explore(&t.obj, max_states);
        if !ex.complete {
            skipped += 1;
            continue;
        }
        rep.cases += 1;
        states += ex.states;
        let mut nfs: Vec<Object> = Vec::new();
        for n in ex.normal_forms {
            if !nfs.iter().any(|m| alpha_eq(m, &n)) {
                nfs.push(n);
            }
        }
        if nfs.len() != 1 {
            let list: Vec<String> = nfs.iter().map(|n| format!("    {}", n)).collect();
            rep.fail(format!("{} has {} normal forms:\n{}", t.obj, nfs.len(), list.join("\n")));
        }
    }
    if rep.cases < cases {
        rep.fail(format!("only {} of {} terms fit in {} states", rep.cases, cases, max_states));
    }
    rep.notes.push(format!("skipped over budget: {}", skipped));
    rep.notes.push(format!("states explored: {}", states));
    rep
}

// ---------------------------------------------------------------------------
// Canonical forms

pub fn canon_check(seed: u64, cases: usize, size: usize) -> Report {
    let mut rep = Report::new("canonical forms: idempotence, strategy independence, projection");
    let mut g = Gen::new(seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    let mut projection_steps: BTreeMap<usize, usize> = BTreeMap::new();
    let mut unreached = 0;
    for _ in 0..cases {
        let o = g.untyped_object(size);
        rep.cases += 1;
        let c = reduce::canon(&o);
        if !reduce::is_canonical(&c) {
            rep.fail(format!("canon({}) = {} is not canonical", o, c));
            continue;
        }
        if !alpha_eq(&reduce::canon(&c), &c) {
            rep.fail(format!("canon not idempotent on {}", o));
        }
        let r = reduce::canon_random(&o, &mut rng);
        if !alpha_eq(&r, &c) {
            rep.fail(format!("strategies disagree on {}:\n  {}\n  {}", o, c, r));
        }
        let (po, pc) = (reduce::projection(&o), reduce::projection(&c));
        if !alpha_eq(&pc, &po) {
            let (_, trace) = reduce::canon_traced(&o);
            let bm = trace.iter().filter(|s| matches!(s.rule, Rule::B | Rule::M)).count();
            let reached = lmu_reaches(&po, &pc, 4 * bm + 4, 20_000);
            *projection_steps.entry(bm).or_default() += 1;
            if !reached {
                unreached += 1;
            }
            rep.fail(format!(
                "projection changes under canon: {}\n  canon fired {} B/M step(s); lambda-mu reaches the new projection: {}",
                o, bm, reached
            ));
        }
    }
    rep.notes.push(format!(
        "projection mismatches by number of B/M steps in canon: {}",
        histogram(&projection_steps)
    ));
    rep.notes.push(format!("projections not reached by lambda-mu steps: {}", unreached));
    rep
}

/// Whether `to` is reachable from `from` in at most `depth` beta/mu steps,
/// giving up after `max_states` states.
fn lmu_reaches(from: &Object, to: &Object, depth: usize, max_states: usize) -> bool {
    let mut layer = vec![from.clone()];
    let mut seen = 1;
    for _ in 0..=depth {
        if layer.iter().any(|o| alpha_eq(o, to)) {
            return true;
        }
        let mut next = Vec::new();
        for o in &layer {
            for (r, p) in lmu_redexes(o) {
                if let Ok(o2) = crate::lmu::lmu_step(o, r, &p) {
                    next.push(o2);
                    seen += 1;
                }
            }
        }
        if seen > max_states {
            return false;
        }
        layer = next;
    }
    false
}

// ---------------------------------------------------------------------------
// Subject reduction

fn all_steps(o: &Object) -> Vec<(Rule, Object)> {
    let mut out = Vec::new();
    let mut rs = reduce::lm_redexes(o);
    rs.extend(reduce::canon_redexes(o));
    for (r, p) in rs {
        if let Ok(q) = reduce::lm_step(o, r, &p) {
            out.push((r, q));
        }
    }
    if reduce::is_canonical(o) {
        for (r, _, q) in reduce::meaningful_reducts(o) {
            out.push((r, q));
        }
    }
    out
}

pub fn subject_reduction(seed: u64, cases: usize, size: usize) -> Report {
    let mut rep = Report::new("subject reduction");
    let mut g = Gen::new(seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x7e9);
    let mut per: BTreeMap<Rule, usize> = BTreeMap::new();
    let mut tries = 0;
    while rep.cases < cases && tries < 20 * cases {
        tries += 1;
        let t = if tries % 2 == 0 { g.typed_term(size) } else { g.typed_command(size) };
        let Ok(d0) = check(&t.obj, &t.gamma, &t.delta) else {
            rep.fail(format!("generated object does not check: {}", t.obj));
            continue;
        };
        let steps = all_steps(&t.obj);
        let Some((r, q)) = steps.choose(&mut rng) else { continue };
        rep.cases += 1;
        *per.entry(*r).or_default() += 1;
        match check(q, &t.gamma, &t.delta) {
            Err(e) => rep.fail(format!("{} step {} => {} breaks typing: {}", r, t.obj, q, e)),
            Ok(d1) => {
                let sub = d1.gamma.iter().all(|(x, a)| d0.gamma.get(x) == Some(a))
                    && d1.delta.iter().all(|(x, a)| d0.delta.get(x) == Some(a));
                if d1.ty != d0.ty || !sub {
                    rep.fail(format!("{} step changes the judgment:\n  {}\n  {}", r, d0.judgment(), d1.judgment()));
                } else if matches!(r, Rule::B | Rule::M | Rule::C | Rule::W)
                    && (d1.gamma != d0.gamma || d1.delta != d0.delta)
                {
                    rep.fail(format!("{} step changes the contexts:\n  {}\n  {}", r, d0.judgment(), d1.judgment()));
                }
            }
        }
    }
    rep.notes.push(format!("steps per rule: {}", histogram(&per)));
    rep
}

// ---------------------------------------------------------------------------
// Proof nets

fn net(o: &Object, t: &Typed) -> Result<ppn::Net, String> {
    let d = check(o, &t.gamma, &t.delta).map_err(|e| format!("{} does not check: {}", o, e))?;
    let n = ppn::translate(&d);
    n.validate().map_err(|e| format!("translation of {} is invalid: {}", o, e))?;
    Ok(n)
}

fn mult_equiv(a: &Object, b: &Object, t: &Typed) -> Result<bool, String> {
    let (mut x, mut y) = (net(a, t)?, net(b, t)?);
    ppn::mult_nf(&mut x);
    ppn::mult_nf(&mut y);
    Ok(ppn::net_equiv(&x, &y))
}

fn full_equiv(a: &Object, b: &Object, t: &Typed, budget: usize) -> Result<bool, String> {
    let (mut x, mut y) = (net(a, t)?, net(b, t)?);
    ppn::full_nf(&mut x, budget).map_err(|e| format!("{}: {}", a, e))?;
    ppn::full_nf(&mut y, budget).map_err(|e| format!("{}: {}", b, e))?;
    Ok(ppn::net_equiv(&x, &y))
}

/// Typed axiom instances have equal multiplicative normal forms.
pub fn ppn_soundness(seed: u64, per_axiom: usize, size: usize) -> Report {
    let mut rep = Report::new("proof-net soundness of the axioms");
    let mut g = Gen::new(seed);
    for k in AxiomKind::WITH_REN {
        for _ in 0..per_axiom {
            let Some((t, ax)) = g.equiv_pair(k, size, true) else {
                rep.fail(format!("no typed {} pair could be generated", k));
                continue;
            };
            rep.cases += 1;
            match mult_equiv(&t.obj, &ax.result, &t) {
                Ok(true) => {}
                Ok(false) => rep.fail(format!("{}: {}  vs  {}", k, t.obj, ax.result)),
                Err(e) => rep.fail(e),
            }
        }
    }
    rep
}

/// Typed steps: objects along canonicalization paths of generated terms,
/// with every step available there.
pub fn simulation_cases(seed: u64, cases: usize, size: usize) -> Vec<(Typed, Rule, Object)> {
    let mut g = Gen::new(seed);
    let mut out = Vec::new();
    let mut tries = 0;
    while out.len() < cases && tries < 50 * cases.max(1) {
        tries += 1;
        let t = if tries % 3 == 0 { g.typed_command(size) } else { g.typed_term(size) };
        let (_, trace) = reduce::canon_traced(&t.obj);
        let mut states = vec![t.obj.clone()];
        states.extend(trace.into_iter().map(|s| s.result));
        for s in states {
            for (r, q) in all_steps(&s) {
                let from = Typed {
                    obj: s.clone(),
                    gamma: t.gamma.clone(),
                    delta: t.delta.clone(),
                };
                out.push((from, r, q));
            }
        }
    }
    out.truncate(cases);
    out
}

pub fn ppn_simulation(seed: u64, cases: usize, size: usize, budget: usize) -> Report {
    let mut rep = Report::new("proof-net simulation of reduction");
    let mut per: BTreeMap<Rule, usize> = BTreeMap::new();
    for (t, r, q) in simulation_cases(seed, cases, size) {
        rep.cases += 1;
        *per.entry(r).or_default() += 1;
        if matches!(r, Rule::B | Rule::M | Rule::C | Rule::W) {
            match mult_equiv(&t.obj, &q, &t) {
                Ok(true) => {}
                Ok(false) => rep.fail(format!("{} (multiplicative): {}  =>  {}", r, t.obj, q)),
                Err(e) => rep.fail(e),
            }
        }
        match full_equiv(&t.obj, &q, &t, budget) {
            Ok(true) => {}
            Ok(false) => rep.fail(format!("{} (full): {}  =>  {}", r, t.obj, q)),
            Err(e) => rep.fail(e),
        }
    }
    rep.notes.push(format!("steps per rule: {}", histogram(&per)));
    rep
}

// ---------------------------------------------------------------------------
// Commutation of meta-operations

fn pure_object(g: &mut Gen, size: usize) -> Object {
    let mut env = Env::default();
    let o = if g.rng().gen_bool(0.6) {
        Object::Term(g.untyped_term(&mut env, size))
    } else {
        Object::Command(g.untyped_command(&mut env, size))
    };
    meta::freshen(&o)
}

fn pure_term(g: &mut Gen, size: usize) -> Term {
    meta::freshen(&Object::Term(g.untyped_term(&mut Env::default(), size)))
        .into_term()
        .unwrap()
}

fn pure_stack(g: &mut Gen, size: usize) -> Stack {
    let n = g.rng().gen_range(1..=2);
    Stack((0..n).map(|_| pure_term(g, size)).collect())
}

fn stack_obj(s: &Stack) -> Object {
    Object::Stack(s.clone())
}

fn as_stack(o: Object) -> Stack {
    match o {
        Object::Stack(s) => s,
        _ => unreachable!(),
    }
}

fn term_obj(t: &Term) -> Object {
    Object::Term(t.clone())
}

/// Renames some free occurrences of the pool names so that every name in
/// `names` has a chance to occur.
fn spread_names(g: &mut Gen, o: Object, names: &[&str]) -> Object {
    let mut o = o;
    for from in ["k", "l"] {
        let to = names.choose(g.rng()).unwrap();
        o = meta::rename_name(&o, &Name::new(from), &Name::new(to));
    }
    o
}

fn spread_vars(g: &mut Gen, t: Term, vars: &[&str]) -> Term {
    let mut t = t;
    for from in ["f", "g", "h"] {
        let to = vars.choose(g.rng()).unwrap();
        t = meta::substitute_term(&t, &Var::new(from), &Term::Var(Var::new(to)));
    }
    t
}

fn spread(g: &mut Gen, o: Object, vars: &[&str], names: &[&str]) -> Object {
    let o = spread_names(g, o, names);
    match o {
        Object::Term(t) => Object::Term(spread_vars(g, t, vars)),
        Object::Command(c) => {
            // Substitute inside the command through a wrapping mu.
            let m = Term::Mu(Name::new("%w"), None, Box::new(c));
            match spread_vars(g, m, vars) {
                Term::Mu(_, _, c) => Object::Command(*c),
                _ => unreachable!(),
            }
        }
        Object::Stack(s) => Object::Stack(Stack(s.0.into_iter().map(|t| spread_vars(g, t, vars)).collect())),
    }
}

/// Checks the five commutation identities between implicit substitution
/// and implicit replacement on `cases` instances each.
pub fn commutation_check(seed: u64, cases: usize, size: usize) -> Report {
    let mut rep = Report::new("commutation of substitution and replacement");
    let mut g = Gen::new(seed);
    g.pure = true;
    let vars = ["x", "y", "z"];
    let names = ["al", "be", "al2", "be2", "ga"];
    let (x, y) = (Var::new("x"), Var::new("y"));
    let (al, be, al2, be2) = (Name::new("al"), Name::new("be"), Name::new("al2"), Name::new("be2"));
    let mut counts = [0usize; 5];
    let mut guard = 0;
    while counts.iter().any(|&c| c < cases) && guard < 100 * cases {
        guard += 1;
        let o = pure_object(&mut g, size);
        let o = spread(&mut g, o, &vars, &names);
        let u = { let t0 = pure_term(&mut g, size / 2); spread(&mut g, term_obj(&t0), &vars, &names) }.into_term().unwrap();
        let v = { let t0 = pure_term(&mut g, size / 2); spread(&mut g, term_obj(&t0), &vars, &names) }.into_term().unwrap();
        let s0 = pure_stack(&mut g, size / 3);
        let s = as_stack(spread(&mut g, stack_obj(&s0), &vars, &names));
        let s1 = pure_stack(&mut g, size / 3);
        let s1 = as_stack(spread(&mut g, stack_obj(&s1), &vars, &names));
        let fv = |t: &Object| meta::fv(t.as_ref());
        let fnm = |t: &Object| meta::fnames(t.as_ref());
        let check = |rep: &mut Report, i: usize, l: Object, r: Object| {
            if !alpha_eq(&l, &r) {
                rep.fail(format!("identity {} on {}:\n  {}\n  {}", i + 1, o, l, r));
            }
        };
        let subst = |o: &Object, x: &Var, u: &Term| meta::substitute(o, x, u);
        let repl = |o: &Object, b: &Name, a: &Name, s: &Stack| meta::replace(o, b, a, s);
        let ss = |s: &Stack, x: &Var, u: &Term| as_stack(meta::substitute(&stack_obj(s), x, u));
        let rs = |s: &Stack, b: &Name, a: &Name, st: &Stack| as_stack(meta::replace(&stack_obj(s), b, a, st));
        let uo = term_obj(&u);
        // 1. o{y\v}{x\u} = o{x\u}{y\ v{x\u}}, y not in fv(u)
        if counts[0] < cases && !fv(&uo).contains(&y) {
            counts[0] += 1;
            let l = subst(&subst(&o, &y, &v), &x, &u);
            let v2 = meta::substitute_term(&v, &x, &u);
            let r = subst(&subst(&o, &x, &u), &y, &v2);
            check(&mut rep, 0, l, r);
        }
        // 2. (o{be/al\s}){x\u} = (o{x\u}){be/al\ s{x\u}}, al not in fn(u)
        if counts[1] < cases && !fnm(&uo).contains(&al) && !fnm(&stack_obj(&s)).contains(&al) {
            counts[1] += 1;
            let l = subst(&repl(&o, &be, &al, &s), &x, &u);
            let r = repl(&subst(&o, &x, &u), &be, &al, &ss(&s, &x, &u));
            check(&mut rep, 1, l, r);
        }
        // 3. (o{x\u}){be/al\s} = (o{be/al\s}){x\ u{be/al\s}}, x not in fv(s)
        if counts[2] < cases && !fv(&stack_obj(&s)).contains(&x) && !fnm(&stack_obj(&s)).contains(&al) {
            counts[2] += 1;
            let l = repl(&subst(&o, &x, &u), &be, &al, &s);
            let u2 = repl(&uo, &be, &al, &s).into_term().unwrap();
            let r = subst(&repl(&o, &be, &al, &s), &x, &u2);
            check(&mut rep, 2, l, r);
        }
        let sn = fnm(&stack_obj(&s));
        let s1n = fnm(&stack_obj(&s1));
        // 4. distinct names, al2 not in fn(s)
        if counts[3] < cases && !sn.contains(&al2) && !sn.contains(&al) && !s1n.contains(&al2) {
            counts[3] += 1;
            let l = repl(&repl(&o, &be2, &al2, &s1), &be, &al, &s);
            let r = repl(&repl(&o, &be, &al, &s), &be2, &al2, &rs(&s1, &be, &al, &s));
            check(&mut rep, 3, l, r);
        }
        // 5. be2 = al, al2 not in fn(s)
        if counts[4] < cases && !sn.contains(&al2) && !sn.contains(&al) && !s1n.contains(&al2) {
            counts[4] += 1;
            let l = repl(&repl(&o, &al, &al2, &s1), &be, &al, &s);
            let st = rs(&s1, &be, &al, &s).concat(&s);
            let r = repl(&repl(&o, &be, &al, &s), &be, &al2, &st);
            check(&mut rep, 4, l, r);
        }
    }
    rep.cases = counts.iter().sum();
    rep.notes.push(format!("instances per identity: {:?}", counts));
    if counts.iter().any(|&c| c < cases) {
        rep.fail(format!("too few instances: {:?}", counts));
    }
    rep
}

// ---------------------------------------------------------------------------
// Permutation of substitution and replacement lists

/// A linear term context over fresh binders, as a function of its hole.
fn ltt(g: &mut Gen, depth: usize, size: usize) -> Vec<Box<dyn Fn(Term) -> Term>> {
    let mut layers: Vec<Box<dyn Fn(Term) -> Term>> = Vec::new();
    for i in 0..depth {
        let w = pure_term(g, size);
        let tag = format!("{}_{}", g.rng().gen::<u16>(), i);
        match g.rng().gen_range(0..4) {
            0 => layers.push(Box::new(move |h| app(h, w.clone()))),
            1 => {
                let y = Var::new(&format!("py{}", tag));
                layers.push(Box::new(move |h| Term::Abs(y.clone(), None, Box::new(h))))
            }
            2 => {
                let z = Var::new(&format!("pz{}", tag));
                layers.push(Box::new(move |h| Term::Sub(Box::new(h), z.clone(), Box::new(w.clone()))))
            }
            _ => {
                let a = Name::new(&format!("pa{}", tag));
                let b = Name::new(["k", "l"][i % 2]);
                layers.push(Box::new(move |h| {
                    Term::Mu(a.clone(), None, Box::new(Command::Named(b.clone(), Box::new(h))))
                }))
            }
        }
    }
    layers
}

fn plug(layers: &[Box<dyn Fn(Term) -> Term>], t: Term) -> Term {
    layers.iter().fold(t, |acc, f| f(acc))
}

/// A linear command context over fresh binders.
fn lcc(g: &mut Gen, depth: usize, size: usize) -> Vec<Box<dyn Fn(Command) -> Command>> {
    let mut layers: Vec<Box<dyn Fn(Command) -> Command>> = Vec::new();
    for i in 0..depth {
        let tag = format!("{}_{}", g.rng().gen::<u16>(), i);
        let a = Name::new(&format!("qa{}", tag));
        let b = Name::new(["k", "l"][i % 2]);
        match g.rng().gen_range(0..3) {
            0 => layers.push(Box::new(move |c| Command::Named(b.clone(), Box::new(Term::Mu(a.clone(), None, Box::new(c)))))),
            1 => {
                let w = pure_term(g, size);
                layers.push(Box::new(move |c| {
                    Command::Named(b.clone(), Box::new(app(Term::Mu(a.clone(), None, Box::new(c)), w.clone())))
                }))
            }
            _ => {
                let s = pure_stack(g, size);
                let d = Name::new(&format!("qd{}", tag));
                layers.push(Box::new(move |c| {
                    let inner = Command::Named(d.clone(), Box::new(Term::Mu(a.clone(), None, Box::new(c))));
                    Command::Repl(Box::new(inner), b.clone(), d.clone(), None, s.clone())
                }))
            }
        }
    }
    layers
}

/// `canon(L<LTT<t>>)` against `canon(LTT<L<t>>)`, and the replacement
/// analogue for commands, each `cases` times.
pub fn permutation_check(seed: u64, cases: usize, size: usize, bounds: Bounds) -> Report {
    let mut rep = Report::new("permutation of substitution and replacement lists");
    let mut g = Gen::new(seed);
    g.pure = true;
    let mut unknown = 0;
    for i in 0..2 * cases {
        let (o, p) = if i % 2 == 0 {
            let n = g.rng().gen_range(1..=2);
            let xs: Vec<Var> = (0..n).map(|j| Var::new(&format!("lx{}", j))).collect();
            let us: Vec<Term> = (0..n).map(|_| pure_term(&mut g, (size / 3).max(1))).collect();
            let names: Vec<&str> = xs.iter().map(|x| x.as_str()).chain(["f", "g"]).collect();
            let t = { let t0 = pure_term(&mut g, size / 2); spread_vars(&mut g, t0, &names) };
            let depth = g.rng().gen_range(1..=3);
            let ctx = ltt(&mut g, depth, (size / 4).max(1));
            let wrap = |t: Term| xs.iter().zip(&us).fold(t, |acc, (x, u)| Term::Sub(Box::new(acc), x.clone(), Box::new(u.clone())));
            (Object::Term(wrap(plug(&ctx, t.clone()))), Object::Term(plug(&ctx, wrap(t))))
        } else {
            let n = g.rng().gen_range(1..=2);
            let als: Vec<Name> = (0..n).map(|j| Name::new(&format!("ra{}", j))).collect();
            let sts: Vec<Stack> = (0..n).map(|_| pure_stack(&mut g, (size / 4).max(1))).collect();
            let mut pool: Vec<&str> = als.iter().map(|a| a.as_str()).collect();
            pool.push("k");
            let c = spread_command(&mut g, size / 2, &pool);
            let depth = g.rng().gen_range(1..=3);
            let ctx = lcc(&mut g, depth, (size / 4).max(1));
            let wrap = |c: Command| {
                als.iter()
                    .zip(&sts)
                    .fold(c, |acc, (a, s)| Command::Repl(Box::new(acc), Name::new("l"), a.clone(), None, s.clone()))
            };
            let cc = |layers: &[Box<dyn Fn(Command) -> Command>], c: Command| layers.iter().fold(c, |acc, f| f(acc));
            (Object::Command(wrap(cc(&ctx, c.clone()))), Object::Command(cc(&ctx, wrap(c))))
        };
        rep.cases += 1;
        let (co, cp) = (reduce::canon(&o), reduce::canon(&p));
        match equiv::equiv(&co, &cp, bounds, false) {
            equiv::EquivResult::Equivalent(_) => {}
            equiv::EquivResult::Exhausted { states } => {
                rep.fail(format!("{}  vs  {}\n  canon: {}  vs  {}\n  exhausted after {} states", o, p, co, cp, states))
            }
            equiv::EquivResult::Unknown { states } => {
                unknown += 1;
                rep.fail(format!("{}  vs  {}\n  canon: {}  vs  {}\n  not within {} states", o, p, co, cp, states))
            }
        }
    }
    rep.notes.push(format!("not within bounds: {}", unknown));
    rep
}

fn spread_command(g: &mut Gen, size: usize, names: &[&str]) -> Command {
    let c = g_command(g, size);
    match spread_names(g, Object::Command(c), names) {
        Object::Command(c) => c,
        _ => unreachable!(),
    }
}

fn g_command(g: &mut Gen, size: usize) -> Command {
    g.untyped_command(&mut Env::default(), size.max(2))
}

// ---------------------------------------------------------------------------
// Admissible equalities

pub fn admissible_check(seed: u64, cases: usize, size: usize, bounds: Bounds) -> Report {
    let mut rep = Report::new("admissible equalities");
    let mut g = Gen::new(seed);
    g.pure = true;
    for i in 0..3 * cases {
        let (o, p) = match i % 3 {
            0 => {
                // t[x\u][y\v] against t[y\v][x\u]
                let t = { let t0 = pure_term(&mut g, size / 2); spread_vars(&mut g, t0, &["ax", "ay", "f"]) };
                let u = pure_term(&mut g, size / 4 + 1);
                let v = pure_term(&mut g, size / 4 + 1);
                let (x, y) = (Var::new("ax"), Var::new("ay"));
                let l = Term::Sub(Box::new(Term::Sub(Box::new(t.clone()), x.clone(), Box::new(u.clone()))), y.clone(), Box::new(v.clone()));
                let r = Term::Sub(Box::new(Term::Sub(Box::new(t), y, Box::new(v))), x, Box::new(u));
                (Object::Term(l), Object::Term(r))
            }
            1 => {
                // c[k/a\s][l/b\s'] against the swap
                let c = spread_command(&mut g, size / 2, &["ra", "rb", "k"]);
                let s = pure_stack(&mut g, size / 4 + 1);
                let s2 = pure_stack(&mut g, size / 4 + 1);
                let (a, b) = (Name::new("ra"), Name::new("rb"));
                let (a2, b2) = (Name::new("k"), Name::new("l"));
                let l = Command::Repl(
                    Box::new(Command::Repl(Box::new(c.clone()), a2.clone(), a.clone(), None, s.clone())),
                    b2.clone(),
                    b.clone(),
                    None,
                    s2.clone(),
                );
                let r = Command::Repl(Box::new(Command::Repl(Box::new(c), b2, b, None, s2)), a2, a, None, s);
                (Object::Command(l), Object::Command(r))
            }
            _ => {
                // [a'] mu a. [b'] mu b. c against [b'] mu b. [a'] mu a. c
                let c = spread_command(&mut g, size / 2, &["ra", "rb", "k"]);
                let (a, b) = (Name::new("ra"), Name::new("rb"));
                let (a2, b2) = (Name::new("k"), Name::new("l"));
                let side = |outer: &Name, ob: &Name, inner: &Name, ib: &Name| {
                    Command::Named(
                        outer.clone(),
                        Box::new(Term::Mu(
                            ob.clone(),
                            None,
                            Box::new(Command::Named(inner.clone(), Box::new(Term::Mu(ib.clone(), None, Box::new(c.clone()))))),
                        )),
                    )
                };
                (Object::Command(side(&a2, &a, &b2, &b)), Object::Command(side(&b2, &b, &a2, &a)))
            }
        };
        rep.cases += 1;
        let (co, cp) = (reduce::canon(&o), reduce::canon(&p));
        if !equiv::equiv(&co, &cp, bounds, false).is_equivalent() {
            rep.fail(format!("{}  vs  {}\n  canon: {}  vs  {}", o, p, co, cp));
        }
    }
    rep
}

// ---------------------------------------------------------------------------
// Worked examples

/// The frozen worked examples, compared up to alpha-equivalence.
pub fn worked_examples() -> Report {
    use crate::parse::{parse_object, parse_stack, parse_term};
    let mut rep = Report::new("worked examples");
    let obj = |s: &str| parse_object(s).expect("example parses");
    let stk = |s: &str| parse_stack(s).expect("example parses");
    let expect = |rep: &mut Report, what: &str, got: Object, want: &str| {
        rep.cases += 1;
        let w = obj(want);
        if !alpha_eq(&got, &w) {
            rep.fail(format!("{}: got {}, want {}", what, got, w));
        }
    };
    let (a, a2, g) = (Name::new("a"), Name::new("a2"), Name::new("g"));
    expect(
        &mut rep,
        "implicit substitution",
        meta::substitute(&obj("(mu 'a. ['a] x) (\\z. z x)"), &Var::new("x"), &parse_term("\\z. z").unwrap()),
        "(mu 'a. ['a] \\z. z) (\\z. z (\\z. z))",
    );
    expect(
        &mut rep,
        "implicit replacement",
        meta::replace(&obj("['a] x (mu 'b. ['a] y)"), &a2, &a, &stk("(\\z. z) . #")),
        "['a2] x (mu 'b. ['a2] y (\\z. z)) (\\z. z)",
    );
    expect(
        &mut rep,
        "replacement on a named term",
        meta::replace(&obj("['a] x"), &g, &a, &stk("y1 . y2 . #")),
        "['g] x y1 y2",
    );
    expect(
        &mut rep,
        "replacement on a replacement",
        meta::replace(&obj("(['a] x)['a/'b \\ z1 . #]"), &g, &a, &stk("y1 . #")),
        "(['g] x y1)['g/'b \\ z1 . y1 . #]",
    );
    expect(
        &mut rep,
        "replacement on a renaming",
        meta::replace(&obj("(['a] x)['a/'b \\ #]"), &g, &a, &stk("y1 . y2 . #")),
        "((['g] x y1 y2)['g2/'b \\ y1 . y2 . #])['g/'g2 \\ #]",
    );
    let c = reduce::canon(&obj("(mu 'a. ['a] x) y z"));
    expect(&mut rep, "canonical form", c.clone(), "mu 'a2. (['a] x)['a2/'a \\ y . z . #]");
    expect(&mut rep, "expansion", reduce::expansion(&c), "mu 'a2. ['a2] (mu 'a. ['a] x) y z");
    rep.cases += 1;
    let (ta, tb) = (Type::base("A"), Type::base("B"));
    let cc = Object::Term(crate::lmu::call_cc_typed(&ta, &tb));
    let peirce = Type::arrow(Type::arrow(Type::arrow(ta.clone(), tb), ta.clone()), ta);
    match check(&cc, &Default::default(), &Default::default()) {
        Ok(d) if d.term_type() == Some(&peirce) => {}
        Ok(d) => rep.fail(format!("call-cc has type {}, want {}", d.ty, peirce)),
        Err(e) => rep.fail(format!("call-cc does not check: {}", e)),
    }
    rep
}
