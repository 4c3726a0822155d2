//! Translation of typing derivations to proof structures.
//!
//! Variables become an axiom followed by a dereliction, applications cut
//! the function against a tensor of the boxed argument and an axiom,
//! abstractions are pars, a mu-abstraction makes its name the
//! distinguished conclusion, a named term relabels it. An explicit
//! substitution cuts the variable's wire against the boxed argument and an
//! explicit replacement cuts the bound name's wire against the tensor tree
//! of its stack, whose leaf axiom carries the new name. Identifiers shared
//! by the two premises of a binary rule are contracted. Cuts only come
//! from explicit operators and from applying an abstraction or a
//! mu-abstraction; an application whose function ends in an axiom is
//! fused on the spot.

use std::collections::BTreeMap;

use super::formula::{trans_stack_type, trans_type, Formula};
use super::net::*;
use crate::syntax::*;
use crate::typing::{Derivation, JType, TRule};

#[derive(Default)]
struct Piece {
    dist: Option<WireId>,
    result: Option<WireId>,
    vars: BTreeMap<Var, WireId>,
    names: BTreeMap<Name, WireId>,
}

struct Tr {
    net: Net,
}

impl Tr {
    fn contract(&mut self, a: WireId, b: WireId, lvl: Option<BoxId>) -> WireId {
        let f = self.net.wire(a).formula.clone();
        let c = self.net.add_node(Kind::Contr, 2, vec![f], lvl);
        self.net.connect(a, Dst::Node(c, 0));
        self.net.connect(b, Dst::Node(c, 1));
        self.net.out(c, 0)
    }

    fn cut(&mut self, a: WireId, b: WireId, lvl: Option<BoxId>) {
        let (p, n) = if self.net.wire(a).formula.is_positive() { (a, b) } else { (b, a) };
        let c = self.net.add_node(Kind::Cut, 2, vec![], lvl);
        self.net.connect(p, Dst::Node(c, 0));
        self.net.connect(n, Dst::Node(c, 1));
    }

    fn weak(&mut self, f: Formula, lvl: Option<BoxId>) -> WireId {
        let w = self.net.add_node(Kind::Weak, 0, vec![f], lvl);
        self.net.out(w, 0)
    }

    fn axiom(&mut self, f: &Formula, lvl: Option<BoxId>) -> (WireId, WireId) {
        // port 0 positive
        let (p, n) = if f.is_positive() { (f.clone(), f.neg()) } else { (f.neg(), f.clone()) };
        let a = self.net.add_node(Kind::Ax, 0, vec![p, n], lvl);
        (self.net.out(a, 0), self.net.out(a, 1))
    }

    fn merge(&mut self, mut a: Piece, b: Piece, lvl: Option<BoxId>) -> Piece {
        for (x, w) in b.vars {
            let w = match a.vars.remove(&x) {
                Some(v) => self.contract(v, w, lvl),
                None => w,
            };
            a.vars.insert(x, w);
        }
        for (n, w) in b.names {
            let w = match a.names.remove(&n) {
                Some(v) => self.contract(v, w, lvl),
                None => w,
            };
            a.names.insert(n, w);
        }
        a
    }

    fn add_name(&mut self, p: &mut Piece, a: &Name, w: WireId, lvl: Option<BoxId>) {
        let w = match p.names.remove(a) {
            Some(v) => self.contract(v, w, lvl),
            None => w,
        };
        p.names.insert(a.clone(), w);
    }

    fn boxed(&mut self, d: &Derivation, lvl: Option<BoxId>) -> Piece {
        let b = self.net.add_box(lvl);
        let inner = self.term(d, Some(b));
        let dist = inner.dist.unwrap();
        let f = self.net.wire(dist).formula.clone();
        let pd = self.net.add_node(Kind::PDoor(b), 1, vec![Formula::bang(f)], lvl);
        self.net.connect(dist, Dst::Node(pd, 0));
        let mut out = Piece {
            dist: Some(self.net.out(pd, 0)),
            ..Piece::default()
        };
        for (x, w) in inner.vars {
            out.vars.insert(x, self.aux(b, w, lvl));
        }
        for (a, w) in inner.names {
            out.names.insert(a, self.aux(b, w, lvl));
        }
        out
    }

    fn aux(&mut self, b: BoxId, w: WireId, lvl: Option<BoxId>) -> WireId {
        let f = self.net.wire(w).formula.clone();
        let ad = self.net.add_node(Kind::ADoor(b), 1, vec![f], lvl);
        self.net.connect(w, Dst::Node(ad, 0));
        self.net.out(ad, 0)
    }

    fn term(&mut self, d: &Derivation, lvl: Option<BoxId>) -> Piece {
        let Object::Term(t) = &d.subject else { unreachable!() };
        match (d.rule, t) {
            (TRule::Ax, Term::Var(x)) => {
                let f = trans_type(d.term_type().unwrap());
                let (q, o) = self.axiom(&f, lvl);
                let dn = self.net.add_node(Kind::Der, 1, vec![Formula::quest(f.neg())], lvl);
                self.net.connect(q, Dst::Node(dn, 0));
                let mut p = Piece {
                    dist: Some(o),
                    ..Piece::default()
                };
                p.vars.insert(x.clone(), self.net.out(dn, 0));
                p
            }
            (TRule::App, Term::App(..)) => {
                let pf = self.term(&d.premises[0], lvl);
                let pu = self.boxed(&d.premises[1], lvl);
                let fb = trans_type(d.term_type().unwrap());
                let (q, o) = self.axiom(&fb, lvl);
                let bang = pu.dist.unwrap();
                let tf = Formula::tensor(self.net.wire(bang).formula.clone(), fb.neg());
                let tn = self.net.add_node(Kind::Tensor, 2, vec![tf], lvl);
                self.net.connect(bang, Dst::Node(tn, 0));
                self.net.connect(q, Dst::Node(tn, 1));
                let tw = self.net.out(tn, 0);
                let fd = pf.dist.unwrap();
                let (src, port) = self.net.wire(fd).src;
                if self.net.node(src).kind == Kind::Ax {
                    // Applying an axiom port: fuse instead of cutting.
                    let far = self.net.out(src, 1 - port);
                    self.net.remove_wire(fd);
                    self.net.remove_node(src);
                    self.net.splice(tw, far);
                } else {
                    self.cut(tw, fd, lvl);
                }
                let mut p = self.merge(
                    Piece {
                        vars: pf.vars,
                        names: pf.names,
                        ..Piece::default()
                    },
                    Piece {
                        vars: pu.vars,
                        names: pu.names,
                        ..Piece::default()
                    },
                    lvl,
                );
                p.dist = Some(o);
                p
            }
            (TRule::Abs, Term::Abs(x, ann, _)) => {
                let mut pb = self.term(&d.premises[0], lvl);
                let fx = Formula::quest(trans_type(ann.as_ref().unwrap()).neg());
                let xw = match pb.vars.remove(x) {
                    Some(w) => w,
                    None => self.weak(fx.clone(), lvl),
                };
                let body = pb.dist.take().unwrap();
                let f = Formula::par(fx, self.net.wire(body).formula.clone());
                let pn = self.net.add_node(Kind::Par, 2, vec![f], lvl);
                self.net.connect(xw, Dst::Node(pn, 0));
                self.net.connect(body, Dst::Node(pn, 1));
                pb.dist = Some(self.net.out(pn, 0));
                pb
            }
            (TRule::Mu, Term::Mu(a, ann, _)) => {
                let mut pc = self.command(&d.premises[0], lvl);
                let f = trans_type(ann.as_ref().unwrap());
                let w = match pc.names.remove(a) {
                    Some(w) => w,
                    None => self.weak(f, lvl),
                };
                pc.dist = Some(w);
                pc
            }
            (TRule::Sub, Term::Sub(_, x, _)) => {
                let mut pb = self.term(&d.premises[0], lvl);
                let pu = self.boxed(&d.premises[1], lvl);
                let fx = Formula::quest(trans_type(d.premises[1].term_type().unwrap()).neg());
                let xw = match pb.vars.remove(x) {
                    Some(w) => w,
                    None => self.weak(fx, lvl),
                };
                self.cut(pu.dist.unwrap(), xw, lvl);
                let dist = pb.dist.take();
                let mut p = self.merge(pb, Piece { dist: None, ..pu }, lvl);
                p.dist = dist;
                p
            }
            _ => unreachable!("term derivation with rule {:?}", d.rule),
        }
    }

    fn command(&mut self, d: &Derivation, lvl: Option<BoxId>) -> Piece {
        let Object::Command(c) = &d.subject else { unreachable!() };
        match c {
            Command::Named(a, _) => {
                let mut pt = self.term(&d.premises[0], lvl);
                let w = pt.dist.take().unwrap();
                self.add_name(&mut pt, a, w, lvl);
                pt
            }
            Command::Repl(_, a2, a, ann, _) => {
                let mut pc = self.command(&d.premises[0], lvl);
                let JType::Stack(st) = &d.premises[1].ty else { unreachable!() };
                let ann = ann.as_ref().unwrap();
                let b = ann.strip_arrows(st.len()).unwrap();
                let aw = match pc.names.remove(a) {
                    Some(w) => w,
                    None => self.weak(trans_stack_type(st, &b), lvl),
                };
                let mut ps = self.stack(&d.premises[1], &b, lvl);
                self.cut(ps.dist.take().unwrap(), aw, lvl);
                let r = ps.result.take().unwrap();
                let mut p = self.merge(pc, ps, lvl);
                self.add_name(&mut p, a2, r, lvl);
                p
            }
        }
    }

    fn stack(&mut self, d: &Derivation, b: &Type, lvl: Option<BoxId>) -> Piece {
        match d.rule {
            TRule::StackEmpty => {
                let (q, o) = self.axiom(&trans_type(b), lvl);
                Piece {
                    dist: Some(q),
                    result: Some(o),
                    ..Piece::default()
                }
            }
            TRule::StackPush => {
                let pt = self.boxed(&d.premises[0], lvl);
                let mut ps = self.stack(&d.premises[1], b, lvl);
                let bang = pt.dist.unwrap();
                let rest = ps.dist.take().unwrap();
                let f = Formula::tensor(self.net.wire(bang).formula.clone(), self.net.wire(rest).formula.clone());
                let tn = self.net.add_node(Kind::Tensor, 2, vec![f], lvl);
                self.net.connect(bang, Dst::Node(tn, 0));
                self.net.connect(rest, Dst::Node(tn, 1));
                let result = ps.result.take();
                let mut p = self.merge(Piece { dist: None, ..pt }, ps, lvl);
                p.dist = Some(self.net.out(tn, 0));
                p.result = result;
                p
            }
            _ => unreachable!("stack derivation with rule {:?}", d.rule),
        }
    }
}

/// Translates a derivation. Stacks are translated at codomain `o`; use
/// [`translate_stack`] to choose it.
pub fn translate(d: &Derivation) -> Net {
    translate_stack(d, &Type::base("o"))
}

pub fn translate_stack(d: &Derivation, b: &Type) -> Net {
    let mut tr = Tr { net: Net::new() };
    let p = match d.subject.sort() {
        Sort::Term => tr.term(d, None),
        Sort::Command => tr.command(d, None),
        Sort::Stack => tr.stack(d, b, None),
    };
    if let Some(w) = p.dist {
        tr.net.connect(w, Dst::Concl(Label::Distinguished));
    }
    if let Some(w) = p.result {
        tr.net.connect(w, Dst::Concl(Label::Result));
    }
    for (x, w) in p.vars {
        tr.net.connect(w, Dst::Concl(Label::Var(x)));
    }
    for (a, w) in p.names {
        tr.net.connect(w, Dst::Concl(Label::Name(a)));
    }
    tr.net
}
