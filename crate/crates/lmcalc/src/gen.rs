//! Seeded random generation of objects: well-typed annotated terms,
//! untyped terms, sigma instances and equivalence pairs.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::equiv::{axiom_instances, AxiomApp, AxiomKind};
use crate::lmu::{sigma_l2r, Sigma};
use crate::meta;
use crate::reduce::canon;
use crate::syntax::*;
use crate::typing::{check, NameCtx, VarCtx};

/// Bound identifiers visible at the current position, innermost last.
#[derive(Clone, Debug, Default)]
pub struct Env {
    pub vars: Vec<(Var, Type)>,
    pub names: Vec<(Name, Type)>,
}

/// A generated object with the types of its free identifiers.
#[derive(Clone, Debug)]
pub struct Typed {
    pub obj: Object,
    pub gamma: VarCtx,
    pub delta: NameCtx,
}

pub struct Gen {
    rng: ChaCha8Rng,
    bases: Vec<Type>,
    pub pure: bool,
    counter: usize,
    free_vars: VarCtx,
    free_names: NameCtx,
}

impl Gen {
    pub fn new(seed: u64) -> Gen {
        Gen {
            rng: ChaCha8Rng::seed_from_u64(seed),
            bases: vec![Type::base("A"), Type::base("B")],
            pure: false,
            counter: 0,
            free_vars: VarCtx::new(),
            free_names: NameCtx::new(),
        }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    fn next(&mut self) -> usize {
        self.counter += 1;
        self.counter
    }

    fn bound_var(&mut self) -> Var {
        let n = self.next();
        Var::new(&format!("x{}", n))
    }

    fn bound_name(&mut self) -> Name {
        let n = self.next();
        Name::new(&format!("a{}", n))
    }

    /// Starts a fresh object: forgets the free identifiers of the last one.
    pub fn reset(&mut self) {
        self.free_vars.clear();
        self.free_names.clear();
    }

    pub fn ty(&mut self, depth: usize) -> Type {
        if depth == 0 || self.rng.gen_bool(0.55) {
            self.bases.choose(&mut self.rng).unwrap().clone()
        } else {
            let a = self.ty(depth - 1);
            let b = self.ty(depth - 1);
            Type::arrow(a, b)
        }
    }

    fn free_var(&mut self, ty: &Type) -> Var {
        let existing: Vec<Var> = self
            .free_vars
            .iter()
            .filter(|(_, t)| *t == ty)
            .map(|(x, _)| x.clone())
            .collect();
        if !existing.is_empty() && self.rng.gen_bool(0.5) {
            return existing.choose(&mut self.rng).unwrap().clone();
        }
        let x = Var::new(&format!("v{}", self.next()));
        self.free_vars.insert(x.clone(), ty.clone());
        x
    }

    fn free_name(&mut self) -> (Name, Type) {
        if !self.free_names.is_empty() && self.rng.gen_bool(0.5) {
            let all: Vec<(Name, Type)> = self.free_names.iter().map(|(a, t)| (a.clone(), t.clone())).collect();
            return all.choose(&mut self.rng).unwrap().clone();
        }
        let a = Name::new(&format!("k{}", self.next()));
        let t = self.ty(1);
        self.free_names.insert(a.clone(), t.clone());
        (a, t)
    }

    fn leaf(&mut self, env: &Env, ty: &Type) -> Term {
        let cands: Vec<&Var> = env.vars.iter().filter(|(_, t)| t == ty).map(|(x, _)| x).collect();
        if !cands.is_empty() && self.rng.gen_bool(0.8) {
            return Term::Var((*cands.choose(&mut self.rng).unwrap()).clone());
        }
        Term::Var(self.free_var(ty))
    }

    /// A term of type `ty` of roughly `size` constructors.
    pub fn term(&mut self, env: &mut Env, ty: &Type, size: usize) -> Term {
        if size <= 1 {
            return self.leaf(env, ty);
        }
        let mut weights = vec![(0u8, 1u32), (1, 4)];
        if matches!(ty, Type::Arrow(..)) {
            weights.push((2, 4));
        }
        if size >= 3 {
            weights.push((3, 3));
        }
        if !self.pure && size >= 4 {
            weights.push((4, 2));
        }
        let total: u32 = weights.iter().map(|w| w.1).sum();
        let mut pick = self.rng.gen_range(0..total);
        let mut choice = 0;
        for (c, w) in &weights {
            if pick < *w {
                choice = *c;
                break;
            }
            pick -= w;
        }
        match choice {
            0 => self.leaf(env, ty),
            1 => {
                let a = self.arg_type(env);
                let fs = (size - 1) / 2 + (size - 1) % 2;
                let us = (size - 1) / 2;
                let f = self.term(env, &Type::arrow(a.clone(), ty.clone()), fs.max(1));
                let u = self.term(env, &a, us.max(1));
                app(f, u)
            }
            2 => {
                let Type::Arrow(a, b) = ty else { unreachable!() };
                let x = self.bound_var();
                env.vars.push((x.clone(), (**a).clone()));
                let body = self.term(env, b, size - 1);
                env.vars.pop();
                Term::Abs(x, Some((**a).clone()), Box::new(body))
            }
            3 => {
                let a = self.bound_name();
                env.names.push((a.clone(), ty.clone()));
                let c = self.command(env, size - 1);
                env.names.pop();
                Term::Mu(a, Some(ty.clone()), Box::new(c))
            }
            _ => {
                let a = self.arg_type(env);
                let x = self.bound_var();
                let us = (size - 1) / 3;
                let u = self.term(env, &a, us.max(1));
                env.vars.push((x.clone(), a));
                let body = self.term(env, ty, (size - 1 - us).max(1));
                env.vars.pop();
                Term::Sub(Box::new(body), x, Box::new(u))
            }
        }
    }

    fn arg_type(&mut self, env: &Env) -> Type {
        if !env.vars.is_empty() && self.rng.gen_bool(0.5) {
            env.vars.choose(&mut self.rng).unwrap().1.clone()
        } else {
            self.ty(1)
        }
    }

    fn pick_name(&mut self, env: &Env) -> (Name, Type) {
        if !env.names.is_empty() && self.rng.gen_bool(0.8) {
            env.names.choose(&mut self.rng).unwrap().clone()
        } else {
            self.free_name()
        }
    }

    pub fn command(&mut self, env: &mut Env, size: usize) -> Command {
        if self.pure || size < 4 || self.rng.gen_bool(0.75) {
            let (a, t) = self.pick_name(env);
            let body = self.term(env, &t, size.saturating_sub(1).max(1));
            return Command::Named(a, Box::new(body));
        }
        let (a2, b) = self.pick_name(env);
        let n = self.rng.gen_range(0..=2usize);
        let st: Vec<Type> = (0..n).map(|_| self.arg_type(env)).collect();
        let ann = Type::stack_arrow(&st, b);
        let per = if n == 0 { 0 } else { (size - 1) / (2 * n) };
        let stack = Stack(st.iter().map(|t| self.term(env, t, per.max(1))).collect());
        let a = self.bound_name();
        env.names.push((a.clone(), ann.clone()));
        let body = self.command(env, (size - 1 - per * n).max(1));
        env.names.pop();
        Command::Repl(Box::new(body), a2, a, Some(ann), stack)
    }

    /// A well-typed annotated term of roughly `size` constructors.
    pub fn typed_term(&mut self, size: usize) -> Typed {
        self.reset();
        let ty = self.ty(2);
        let t = self.term(&mut Env::default(), &ty, size);
        self.finish(Object::Term(t))
    }

    pub fn typed_command(&mut self, size: usize) -> Typed {
        self.reset();
        let c = self.command(&mut Env::default(), size);
        self.finish(Object::Command(c))
    }

    fn finish(&mut self, o: Object) -> Typed {
        let fr = meta::free(o.as_ref());
        let gamma = self.free_vars.iter().filter(|(x, _)| fr.vars.contains(*x)).map(|(x, t)| (x.clone(), t.clone())).collect();
        let delta = self.free_names.iter().filter(|(a, _)| fr.names.contains(*a)).map(|(a, t)| (a.clone(), t.clone())).collect();
        Typed {
            obj: meta::freshen(&o),
            gamma,
            delta,
        }
    }

    // -----------------------------------------------------------------------
    // Untyped generation

    /// An untyped term over the given bound identifiers plus a small pool
    /// of free ones.
    pub fn untyped_term(&mut self, env: &mut Env, size: usize) -> Term {
        let leaf = |g: &mut Gen, env: &Env| -> Term {
            if !env.vars.is_empty() && g.rng.gen_bool(0.7) {
                Term::Var(env.vars.choose(&mut g.rng).unwrap().0.clone())
            } else {
                Term::Var(Var::new(["f", "g", "h"].choose(&mut g.rng).unwrap()))
            }
        };
        if size <= 1 {
            return leaf(self, env);
        }
        let k = if self.pure { 3 } else { 4 };
        match self.rng.gen_range(0..k) {
            0 => {
                let fs = (size - 1).div_ceil(2);
                let f = self.untyped_term(env, fs.max(1));
                let u = self.untyped_term(env, ((size - 1) / 2).max(1));
                app(f, u)
            }
            1 => {
                let x = self.bound_var();
                env.vars.push((x.clone(), Type::base("A")));
                let b = self.untyped_term(env, size - 1);
                env.vars.pop();
                Term::Abs(x, None, Box::new(b))
            }
            2 => {
                let a = self.bound_name();
                env.names.push((a.clone(), Type::base("A")));
                let c = self.untyped_command(env, size - 1);
                env.names.pop();
                Term::Mu(a, None, Box::new(c))
            }
            _ => {
                let x = self.bound_var();
                let us = ((size - 1) / 3).max(1);
                let u = self.untyped_term(env, us);
                env.vars.push((x.clone(), Type::base("A")));
                let b = self.untyped_term(env, (size - 1 - us).max(1));
                env.vars.pop();
                Term::Sub(Box::new(b), x, Box::new(u))
            }
        }
    }

    fn untyped_name(&mut self, env: &Env) -> Name {
        if !env.names.is_empty() && self.rng.gen_bool(0.75) {
            env.names.choose(&mut self.rng).unwrap().0.clone()
        } else {
            Name::new(["k", "l"].choose(&mut self.rng).unwrap())
        }
    }

    pub fn untyped_command(&mut self, env: &mut Env, size: usize) -> Command {
        if self.pure || size < 4 || self.rng.gen_bool(0.7) {
            let a = self.untyped_name(env);
            let t = self.untyped_term(env, size.saturating_sub(1).max(1));
            return Command::Named(a, Box::new(t));
        }
        let a2 = self.untyped_name(env);
        let n = self.rng.gen_range(0..=2usize);
        let per = if n == 0 { 0 } else { ((size - 1) / (2 * n)).max(1) };
        let s = Stack((0..n).map(|_| self.untyped_term(env, per)).collect());
        let a = self.bound_name();
        env.names.push((a.clone(), Type::base("A")));
        let body = self.untyped_command(env, (size - 1).saturating_sub(per * n).max(1));
        env.names.pop();
        Command::Repl(Box::new(body), a2, a, None, s)
    }

    pub fn untyped_stack(&mut self, env: &mut Env, len: usize, size: usize) -> Stack {
        Stack((0..len).map(|_| self.untyped_term(env, size)).collect())
    }

    /// An untyped object of a random sort.
    pub fn untyped_object(&mut self, size: usize) -> Object {
        let mut env = Env::default();
        let o = match self.rng.gen_range(0..5) {
            0..=2 => Object::Term(self.untyped_term(&mut env, size)),
            3 => Object::Command(self.untyped_command(&mut env, size)),
            _ => {
                let n = self.rng.gen_range(0..3);
                Object::Stack(self.untyped_stack(&mut env, n, (size / 2).max(1)))
            }
        };
        meta::freshen(&o)
    }

    /// Plugs `inner` into a random position of matching sort of a random
    /// host of roughly `size` constructors.
    pub fn in_context(&mut self, inner: &Object, size: usize) -> (Object, Path) {
        let mut env = Env::default();
        for _ in 0..20 {
            let host = if self.rng.gen_bool(0.5) {
                Object::Term(self.untyped_term(&mut env, size.max(1)))
            } else {
                Object::Command(self.untyped_command(&mut env, size.max(2)))
            };
            let ps: Vec<Path> = host
                .as_ref()
                .positions()
                .into_iter()
                .filter(|p| host.as_ref().at(p).unwrap().sort() == inner.sort())
                .collect();
            if let Some(p) = ps.choose(&mut self.rng) {
                if let Ok(o) = replace_at(&host, p, inner.clone()) {
                    return (o, p.clone());
                }
            }
        }
        (inner.clone(), Path::root())
    }

    // -----------------------------------------------------------------------
    // Sigma instances

    /// The left side of a random instance of `kind`, in pure lambda-mu.
    pub fn sigma_redex(&mut self, kind: Sigma, size: usize) -> Object {
        let was = self.pure;
        self.pure = true;
        let s = (size / 3).max(1);
        let mut env = Env::default();
        let o = loop {
            let cand = self.sigma_shape(kind, &mut env, s);
            if sigma_l2r(kind, cand.as_ref()).is_some() {
                break cand;
            }
        };
        self.pure = was;
        o
    }

    fn sigma_shape(&mut self, kind: Sigma, env: &mut Env, s: usize) -> Object {
        let a = Type::base("A");
        match kind {
            Sigma::S1 => {
                let (x, y) = (self.bound_var(), self.bound_var());
                let v = self.untyped_term(env, s);
                env.vars.push((y.clone(), a.clone()));
                env.vars.push((x.clone(), a.clone()));
                let t = self.untyped_term(env, s);
                env.vars.truncate(env.vars.len() - 2);
                Object::Term(app(Term::Abs(y, None, Box::new(Term::Abs(x, None, Box::new(t)))), v))
            }
            Sigma::S2 => {
                let x = self.bound_var();
                let u = self.untyped_term(env, s);
                let v = self.untyped_term(env, s);
                env.vars.push((x.clone(), a.clone()));
                let t = self.untyped_term(env, s);
                env.vars.pop();
                Object::Term(app(Term::Abs(x, None, Box::new(app(t, v))), u))
            }
            Sigma::S3 => {
                let (x, al) = (self.bound_var(), self.bound_name());
                let w = self.untyped_term(env, s);
                env.vars.push((x.clone(), a.clone()));
                env.names.push((al.clone(), a.clone()));
                let b = self.untyped_name(env);
                let u = self.untyped_term(env, s);
                env.vars.pop();
                env.names.pop();
                let m = Term::Mu(al, None, Box::new(Command::Named(b, Box::new(u))));
                Object::Term(app(Term::Abs(x, None, Box::new(m)), w))
            }
            Sigma::S4 => {
                let (al, be) = (self.bound_name(), self.bound_name());
                let a2 = self.untyped_name(env);
                let v = self.untyped_term(env, s);
                let w = self.untyped_term(env, s);
                env.names.push((al.clone(), a.clone()));
                let b2 = self.untyped_name(env);
                env.names.push((be.clone(), a.clone()));
                let c = self.untyped_command(env, s);
                env.names.truncate(env.names.len() - 2);
                let inner = app(Term::Mu(be, None, Box::new(c)), w);
                let m = Term::Mu(al, None, Box::new(Command::Named(b2, Box::new(inner))));
                Object::Command(Command::Named(a2, Box::new(app(m, v))))
            }
            Sigma::S5 => {
                let (al, be, x) = (self.bound_name(), self.bound_name(), self.bound_var());
                let a2 = self.untyped_name(env);
                let v = self.untyped_term(env, s);
                env.names.push((al.clone(), a.clone()));
                let b2 = self.untyped_name(env);
                env.names.push((be.clone(), a.clone()));
                env.vars.push((x.clone(), a.clone()));
                let c = self.untyped_command(env, s);
                env.names.truncate(env.names.len() - 2);
                env.vars.pop();
                let l = Term::Abs(x, None, Box::new(Term::Mu(be, None, Box::new(c))));
                let m = Term::Mu(al, None, Box::new(Command::Named(b2, Box::new(l))));
                Object::Command(Command::Named(a2, Box::new(app(m, v))))
            }
            Sigma::S6 => {
                let (al, be) = (self.bound_name(), self.bound_name());
                let (x, y) = (self.bound_var(), self.bound_var());
                let a2 = self.untyped_name(env);
                env.vars.push((x.clone(), a.clone()));
                env.names.push((al.clone(), a.clone()));
                let b2 = self.untyped_name(env);
                env.vars.push((y.clone(), a.clone()));
                env.names.push((be.clone(), a.clone()));
                let c = self.untyped_command(env, s);
                env.vars.truncate(env.vars.len() - 2);
                env.names.truncate(env.names.len() - 2);
                let inner = Term::Abs(y, None, Box::new(Term::Mu(be, None, Box::new(c))));
                let m = Term::Mu(al, None, Box::new(Command::Named(b2, Box::new(inner))));
                Object::Command(Command::Named(a2, Box::new(Term::Abs(x, None, Box::new(m)))))
            }
            Sigma::S7 => {
                let be = self.bound_name();
                let a2 = self.untyped_name(env);
                env.names.push((be.clone(), a.clone()));
                let c = self.untyped_command(env, s);
                env.names.pop();
                Object::Command(Command::Named(a2, Box::new(Term::Mu(be, None, Box::new(c)))))
            }
            Sigma::S8 => {
                let al = self.bound_name();
                let v = self.untyped_term(env, s);
                Object::Term(Term::Mu(al.clone(), None, Box::new(Command::Named(al, Box::new(v)))))
            }
        }
    }

    /// A random sigma pair `(o, p)` in pure lambda-mu, rewritten
    /// left to right inside a random context.
    pub fn sigma_pair(&mut self, kind: Sigma, size: usize) -> (Object, Object) {
        let redex = self.sigma_redex(kind, size);
        let rhs = sigma_l2r(kind, redex.as_ref()).unwrap();
        let was = self.pure;
        self.pure = true;
        let (o, path) = self.in_context(&redex, size / 2);
        self.pure = was;
        let p = replace_at(&o, &path, rhs).unwrap();
        (meta::freshen(&o), meta::freshen(&p))
    }

    // -----------------------------------------------------------------------
    // Equivalence pairs

    /// A canonical, typed object with at least one instance of `kind`,
    /// together with one such instance chosen at random. With `typed`, the
    /// instance's result must type-check in the same contexts.
    pub fn equiv_pair(&mut self, kind: AxiomKind, size: usize, typed: bool) -> Option<(Typed, AxiomApp)> {
        for attempt in 0..200 {
            let t = if attempt % 2 == 0 {
                self.axiom_shape(kind, size)
            } else {
                self.typed_term(size)
            };
            let c = canon(&t.obj);
            let insts: Vec<AxiomApp> = axiom_instances(&c, kind == AxiomKind::Ren)
                .into_iter()
                .filter(|a| a.kind == kind)
                .filter(|a| !typed || check(&a.result, &t.gamma, &t.delta).is_ok())
                .collect();
            if let Some(a) = insts.choose(&mut self.rng) {
                let a = a.clone();
                return Some((
                    Typed {
                        obj: c,
                        gamma: t.gamma,
                        delta: t.delta,
                    },
                    a,
                ));
            }
        }
        None
    }

    /// A typed object built around the left side of `kind`.
    pub fn axiom_shape(&mut self, kind: AxiomKind, size: usize) -> Typed {
        self.reset();
        let s = (size / 3).max(1);
        let mut env = Env::default();
        let o = match kind {
            AxiomKind::Exs => {
                // (LTT<v>)[x\u] with x used only in v
                let ta = self.ty(1);
                let x = self.bound_var();
                let u = self.term(&mut env, &ta, s);
                let ty = self.ty(1);
                env.vars.push((x.clone(), ta));
                let (body, _) = self.linear_term_context(&mut env, &ty, s, &x);
                env.vars.pop();
                Object::Term(Term::Sub(Box::new(body), x, Box::new(u)))
            }
            AxiomKind::Exr => {
                // (LCC<d>)[a2/a\s] with a used only in d
                let (a2, b) = self.pick_name(&env);
                let n = self.rng.gen_range(0..=2usize);
                let st: Vec<Type> = (0..n).map(|_| self.ty(1)).collect();
                let stack = Stack(st.iter().map(|t| self.term(&mut env, t, s)).collect());
                let ann = Type::stack_arrow(&st, b);
                let a = self.bound_name();
                env.names.push((a.clone(), ann.clone()));
                let d = self.command(&mut env, s);
                env.names.pop();
                let body = self.linear_command_context(&mut env, d);
                Object::Command(Command::Repl(Box::new(body), a2, a, Some(ann), stack))
            }
            AxiomKind::Lin => {
                let (a2, b) = self.pick_name(&env);
                let n = self.rng.gen_range(1..=2usize);
                let st: Vec<Type> = (0..n).map(|_| self.ty(1)).collect();
                let stack = Stack(st.iter().map(|t| self.term(&mut env, t, s)).collect());
                let ann = Type::stack_arrow(&st, b);
                let u = self.term(&mut env, &ann, s);
                let a = self.bound_name();
                let body = Command::Named(a.clone(), Box::new(u));
                let body = self.linear_command_context(&mut env, body);
                Object::Command(Command::Repl(Box::new(body), a2, a, Some(ann), stack))
            }
            AxiomKind::Pp => {
                let (ta, tb, tc, td) = (self.ty(1), self.ty(1), self.ty(1), self.ty(1));
                let (x, y) = (self.bound_var(), self.bound_var());
                let (al, be) = (self.bound_name(), self.bound_name());
                let a2 = Name::new(&format!("k{}", self.next()));
                let b2 = Name::new(&format!("k{}", self.next()));
                self.free_names.insert(a2.clone(), Type::arrow(ta.clone(), tb.clone()));
                self.free_names.insert(b2.clone(), Type::arrow(tc.clone(), td.clone()));
                env.vars.push((x.clone(), ta.clone()));
                env.vars.push((y.clone(), tc.clone()));
                env.names.push((al.clone(), tb.clone()));
                env.names.push((be.clone(), td.clone()));
                let u = self.command(&mut env, s);
                let inner = Term::Abs(y, Some(tc), Box::new(Term::Mu(be, Some(td), Box::new(u))));
                let m = Term::Mu(al, Some(tb), Box::new(Command::Named(b2, Box::new(inner))));
                Object::Command(Command::Named(a2, Box::new(Term::Abs(x, Some(ta), Box::new(m)))))
            }
            AxiomKind::Rho | AxiomKind::Ren => {
                let (a2, b) = self.pick_name(&env);
                let be = self.bound_name();
                env.names.push((be.clone(), b.clone()));
                let c = self.command(&mut env, s);
                env.names.pop();
                Object::Command(Command::Named(a2, Box::new(Term::Mu(be, Some(b), Box::new(c)))))
            }
            AxiomKind::Theta => {
                let ty = self.ty(1);
                let t = self.term(&mut env, &ty, s);
                let al = self.bound_name();
                Object::Term(Term::Mu(al.clone(), Some(ty), Box::new(Command::Named(al, Box::new(t)))))
            }
        };
        let (o, _) = if self.rng.gen_bool(0.5) {
            (o, Path::root())
        } else {
            self.typed_context(o, s)
        };
        self.finish(o)
    }

    /// A term of type `ty` of the form LTT<v> where `x` is bound in `env`
    /// and may occur only in `v`.
    fn linear_term_context(&mut self, env: &mut Env, ty: &Type, s: usize, x: &Var) -> (Term, Path) {
        let hidden = env.vars.iter().position(|(y, _)| y == x).unwrap();
        match self.rng.gen_range(0..4) {
            0 => {
                // LTT t
                let a = self.ty(1);
                let (f, p) = self.linear_term_context(env, &Type::arrow(a.clone(), ty.clone()), s, x);
                let saved = env.vars.remove(hidden);
                let w = self.term(env, &a, s);
                env.vars.insert(hidden, saved);
                (app(f, w), p)
            }
            1 if matches!(ty, Type::Arrow(..)) => {
                let Type::Arrow(a, b) = ty else { unreachable!() };
                let y = self.bound_var();
                env.vars.push((y.clone(), (**a).clone()));
                let (body, p) = self.linear_term_context(env, b, s, x);
                env.vars.pop();
                (Term::Abs(y, Some((**a).clone()), Box::new(body)), p)
            }
            2 => {
                // mu b. [b'] LTT
                let be = self.bound_name();
                env.names.push((be.clone(), ty.clone()));
                let (b2, bt) = self.pick_name(env);
                let (t, p) = self.linear_term_context(env, &bt, s, x);
                env.names.pop();
                (Term::Mu(be, Some(ty.clone()), Box::new(Command::Named(b2, Box::new(t)))), p)
            }
            _ => {
                // the hole, filled with a term that mentions x when possible
                let t = self.term(env, ty, s);
                (t, Path::root())
            }
        }
    }

    /// Wraps a command in a random linear command context.
    fn linear_command_context(&mut self, env: &mut Env, d: Command) -> Command {
        match self.rng.gen_range(0..3) {
            0 => {
                // [b] mu g. d  (with g fresh and unused)
                let (b, bt) = self.pick_name(env);
                let g = self.bound_name();
                Command::Named(b, Box::new(Term::Mu(g, Some(bt), Box::new(d))))
            }
            1 => {
                let (b2, bt) = self.pick_name(env);
                let ty = Type::arrow(self.ty(1), bt);
                let Type::Arrow(a, _) = &ty else { unreachable!() };
                let y = self.bound_var();
                let g = self.bound_name();
                let Type::Arrow(_, r) = &ty else { unreachable!() };
                let inner = Term::Mu(g, Some((**r).clone()), Box::new(d));
                Command::Named(b2, Box::new(Term::Abs(y, Some((**a).clone()), Box::new(inner))))
            }
            _ => d,
        }
    }

    /// Places an object inside a random typed context.
    fn typed_context(&mut self, o: Object, s: usize) -> (Object, Path) {
        let mut env = Env::default();
        match o {
            Object::Term(t) => {
                if self.rng.gen_bool(0.5) {
                    let a = self.ty(1);
                    let w = self.term(&mut env, &a, s);
                    let y = self.bound_var();
                    let f = Term::Abs(y, Some(a), Box::new(t));
                    (Object::Term(app(f, w)), Path(vec![Step::AppFun, Step::AbsBody]))
                } else {
                    let a = self.ty(1);
                    let y = self.bound_var();
                    (Object::Term(Term::Abs(y, Some(a), Box::new(t))), Path(vec![Step::AbsBody]))
                }
            }
            Object::Command(c) => {
                let ty = self.ty(1);
                let g = self.bound_name();
                (Object::Term(Term::Mu(g, Some(ty), Box::new(c))), Path(vec![Step::MuBody]))
            }
            Object::Stack(_) => (o, Path::root()),
        }
    }
}

/// `gen_typed(seed, size)`: a reproducible well-typed term.
pub fn gen_typed(seed: u64, size: usize) -> Typed {
    Gen::new(seed).typed_term(size)
}
