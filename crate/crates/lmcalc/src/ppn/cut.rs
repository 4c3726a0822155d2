//! Cut elimination.
//!
//! Multiplicative cuts are axiom cuts and tensor/par cuts. Exponential
//! cuts have a duplicable positive side: a box, or a tensor tree whose
//! left premises are boxes and whose rightmost leaf is an axiom. That side
//! is erased by a weakening, copied by a contraction, moved into a box
//! through an auxiliary door, or, for a box facing a dereliction, opened.

use std::collections::BTreeSet;

use super::net::*;
use crate::Error;

/// A duplicable positive subnet hanging off `root`.
#[derive(Clone, Debug)]
struct Tree {
    root: WireId,
    nodes: BTreeSet<NodeId>,
    frontier: Vec<WireId>,
}

#[derive(Clone, Debug)]
enum Redex {
    Ax { ax: NodeId },
    TensorPar { t: NodeId, p: NodeId },
    Der { b: BoxId, der: NodeId },
    Weak { tree: Tree, w: NodeId },
    Contr { tree: Tree, c: NodeId },
    Aux { tree: Tree, d: NodeId },
}

impl Redex {
    fn multiplicative(&self) -> bool {
        matches!(self, Redex::Ax { .. } | Redex::TensorPar { .. })
    }
}

fn tree_at(net: &Net, root: WireId) -> Option<Tree> {
    let mut nodes = BTreeSet::new();
    let mut cur = net.wire(root).src.0;
    loop {
        match net.node(cur).kind {
            Kind::PDoor(b) => {
                if !nodes.is_empty() {
                    return None;
                }
                nodes.extend(net.box_nodes(b));
                break;
            }
            Kind::Tensor => {
                nodes.insert(cur);
                let left = net.premise_src(cur, 0);
                let Kind::PDoor(b) = net.node(left).kind else { return None };
                nodes.extend(net.box_nodes(b));
                let w = net.node(cur).ins[1];
                let (next, port) = net.wire(w).src;
                match net.node(next).kind {
                    Kind::Ax if port == 0 => {
                        nodes.insert(next);
                        break;
                    }
                    Kind::Tensor => cur = next,
                    _ => return None,
                }
            }
            _ => return None,
        }
    }
    let mut frontier = Vec::new();
    for &n in &nodes {
        for &w in &net.node(n).outs {
            if w == root {
                continue;
            }
            match net.wire(w).dst {
                Dst::Node(m, _) if nodes.contains(&m) => {}
                _ => frontier.push(w),
            }
        }
    }
    Some(Tree { root, nodes, frontier })
}

fn classify(net: &Net, c: NodeId) -> Option<Redex> {
    let nd = net.node(c);
    let (pw, nw) = (nd.ins[0], nd.ins[1]);
    let p = net.wire(pw).src.0;
    let n = net.wire(nw).src.0;
    if net.node(p).kind == Kind::Ax {
        return Some(Redex::Ax { ax: p });
    }
    if net.node(n).kind == Kind::Ax {
        return Some(Redex::Ax { ax: n });
    }
    match (net.node(p).kind, net.node(n).kind) {
        (Kind::Tensor, Kind::Par) => Some(Redex::TensorPar { t: p, p: n }),
        (Kind::PDoor(b), Kind::Der) => Some(Redex::Der { b, der: n }),
        (_, Kind::Weak) => Some(Redex::Weak { tree: tree_at(net, pw)?, w: n }),
        (_, Kind::Contr) => Some(Redex::Contr { tree: tree_at(net, pw)?, c: n }),
        (_, Kind::ADoor(_)) => Some(Redex::Aux { tree: tree_at(net, pw)?, d: n }),
        _ => None,
    }
}

fn new_cut(net: &mut Net, a: WireId, b: WireId, lvl: Option<BoxId>) -> NodeId {
    let (p, n) = if net.wire(a).formula.is_positive() { (a, b) } else { (b, a) };
    let c = net.add_node(Kind::Cut, 2, vec![], lvl);
    net.connect(p, Dst::Node(c, 0));
    net.connect(n, Dst::Node(c, 1));
    c
}

fn apply(net: &mut Net, c: NodeId, r: Redex) {
    let lvl = net.node(c).level;
    let [pw, nw] = [net.node(c).ins[0], net.node(c).ins[1]];
    match r {
        Redex::Ax { ax } => {
            let (into, other) = if net.wire(pw).src.0 == ax { (pw, nw) } else { (nw, pw) };
            let port = net.wire(into).src.1;
            let far = net.out(ax, 1 - port);
            net.remove_node(c);
            net.remove_wire(into);
            net.remove_node(ax);
            if far == other {
                net.remove_wire(far);
            } else {
                net.splice(other, far);
            }
        }
        Redex::TensorPar { t, p } => {
            let a = net.node(t).ins.clone();
            let b = net.node(p).ins.clone();
            for n in [c, t, p] {
                net.remove_node(n);
            }
            net.remove_wire(pw);
            net.remove_wire(nw);
            new_cut(net, a[0], b[0], lvl);
            new_cut(net, a[1], b[1], lvl);
        }
        Redex::Der { b, der } => {
            let pd = net.wire(pw).src.0;
            let o = net.node(pd).ins[0];
            let q = net.node(der).ins[0];
            for n in [c, pd, der] {
                net.remove_node(n);
            }
            net.remove_wire(pw);
            net.remove_wire(nw);
            new_cut(net, o, q, lvl);
            let parent = net.box_parent(b);
            for d in net.aux_doors(b) {
                let (i, j) = (net.node(d).ins[0], net.node(d).outs[0]);
                net.remove_node(d);
                net.splice(i, j);
            }
            for n in net.node_ids() {
                if net.node(n).level == Some(b) {
                    net.node_mut(n).level = parent;
                }
            }
            for bb in net.box_ids() {
                if net.box_parent(bb) == Some(b) {
                    net.boxes[bb].as_mut().unwrap().parent = parent;
                }
            }
            net.boxes[b] = None;
        }
        Redex::Weak { tree, w } => erase(net, c, &tree, w, lvl),
        Redex::Contr { tree, c: cn } => {
            let qs = net.node(cn).ins.clone();
            if qs.is_empty() {
                erase(net, c, &tree, cn, lvl);
                return;
            }
            let mut copies = vec![(tree.root, tree.frontier.clone())];
            for _ in 1..qs.len() {
                let (_, ext) = net.copy_nodes(&tree.nodes);
                copies.push((ext[&tree.root], tree.frontier.iter().map(|f| ext[f]).collect()));
            }
            net.remove_node(c);
            net.remove_node(cn);
            net.remove_wire(nw);
            for (i, f) in tree.frontier.iter().enumerate() {
                let dst = net.wire(*f).dst.clone();
                let fm = net.wire(*f).formula.clone();
                let k = net.add_node(Kind::Contr, qs.len(), vec![fm], lvl);
                let ko = net.out(k, 0);
                net.connect(ko, dst);
                for (j, (_, fr)) in copies.iter().enumerate() {
                    net.connect(fr[i], Dst::Node(k, j));
                }
            }
            for (j, (root, _)) in copies.iter().enumerate() {
                new_cut(net, *root, qs[j], lvl);
            }
        }
        Redex::Aux { tree, d } => {
            let Kind::ADoor(b) = net.node(d).kind else { unreachable!() };
            let q = net.node(d).ins[0];
            net.remove_node(d);
            net.remove_wire(nw);
            net.connect(q, Dst::Node(c, 1));
            net.node_mut(c).level = Some(b);
            for &n in &tree.nodes {
                if net.node(n).level == lvl {
                    net.node_mut(n).level = Some(b);
                }
                if let Kind::PDoor(bb) = net.node(n).kind {
                    if net.box_parent(bb) == lvl {
                        net.boxes[bb].as_mut().unwrap().parent = Some(b);
                    }
                }
            }
            for &f in &tree.frontier {
                let dst = net.wire(f).dst.clone();
                let fm = net.wire(f).formula.clone();
                let ad = net.add_node(Kind::ADoor(b), 1, vec![fm], lvl);
                let ao = net.out(ad, 0);
                net.connect(ao, dst);
                net.connect(f, Dst::Node(ad, 0));
            }
        }
    }
}

/// Erases `tree` against the weakening-like node `w` (a weakening or an
/// empty contraction), leaving weakenings on the frontier.
fn erase(net: &mut Net, c: NodeId, tree: &Tree, w: NodeId, lvl: Option<BoxId>) {
    let nw = net.node(c).ins[1];
    net.delete_nodes(&tree.nodes);
    net.remove_wire(tree.root);
    net.remove_wire(nw);
    net.remove_node(w);
    net.remove_node(c);
    for &f in &tree.frontier {
        let dst = net.wire(f).dst.clone();
        let fm = net.wire(f).formula.clone();
        net.remove_wire(f);
        let k = net.add_node(Kind::Weak, 0, vec![fm], lvl);
        let ko = net.out(k, 0);
        net.connect(ko, dst);
    }
}

fn cuts(net: &Net) -> Vec<NodeId> {
    net.node_ids().into_iter().filter(|&n| net.node(n).kind == Kind::Cut).collect()
}

fn find(net: &Net, mult: bool) -> Option<(NodeId, Redex)> {
    cuts(net)
        .into_iter()
        .filter_map(|c| classify(net, c).map(|r| (c, r)))
        .find(|(_, r)| r.multiplicative() == mult)
}

/// Eliminates multiplicative cuts. Returns the number of steps.
pub fn mult_nf(net: &mut Net) -> usize {
    let mut steps = 0;
    while let Some((c, r)) = find(net, true) {
        apply(net, c, r);
        steps += 1;
    }
    steps
}

/// Eliminates all cuts, multiplicative ones first. Fails when more than
/// `budget` exponential steps are needed or a cut is stuck.
pub fn full_nf(net: &mut Net, budget: usize) -> Result<usize, Error> {
    let mut steps = mult_nf(net);
    let mut exp = 0;
    loop {
        match find(net, false) {
            Some((c, r)) => {
                if exp >= budget {
                    return Err(Error::Budget(budget));
                }
                apply(net, c, r);
                exp += 1;
                steps += 1 + mult_nf(net);
            }
            None => {
                if net.cut_count() > 0 {
                    return Err(Error::Net("irreducible cut".into()));
                }
                return Ok(steps);
            }
        }
    }
}

/// The number of cuts that some rule applies to.
pub fn redex_count(net: &Net) -> usize {
    cuts(net).into_iter().filter(|&c| classify(net, c).is_some()).count()
}
