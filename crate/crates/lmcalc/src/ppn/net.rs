//! Proof structures stored flat: slabs of nodes and wires, with boxes
//! recorded as an ownership forest.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use super::formula::Formula;
use crate::syntax::{Name, Var};
use crate::Error;

pub type NodeId = usize;
pub type WireId = usize;
pub type BoxId = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    /// Two conclusions; port 0 is the positive one.
    Ax,
    /// Two premises; premise 0 is the positive one.
    Cut,
    Weak,
    /// Any number of premises, one conclusion.
    Contr,
    /// Premises `!O` and `Q`.
    Tensor,
    /// Premises `?Q` and `O`.
    Par,
    Der,
    /// Principal door of a box.
    PDoor(BoxId),
    /// Auxiliary door of a box.
    ADoor(BoxId),
}

impl Kind {
    pub fn tag(&self) -> &'static str {
        match self {
            Kind::Ax => "ax",
            Kind::Cut => "cut",
            Kind::Weak => "w",
            Kind::Contr => "c",
            Kind::Tensor => "tensor",
            Kind::Par => "par",
            Kind::Der => "d",
            Kind::PDoor(_) => "!",
            Kind::ADoor(_) => "aux",
        }
    }
}

/// Label of a conclusion of the whole net.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Distinguished,
    /// The codomain conclusion of a stack translated on its own.
    Result,
    Var(Var),
    Name(Name),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Distinguished => f.write_str("*"),
            Label::Result => f.write_str("result"),
            Label::Var(x) => write!(f, "{}", x),
            Label::Name(a) => write!(f, "{}", a),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Dst {
    Node(NodeId, usize),
    Concl(Label),
    Open,
}

#[derive(Clone, Debug)]
pub struct Wire {
    pub formula: Formula,
    pub src: (NodeId, usize),
    pub dst: Dst,
}

#[derive(Clone, Debug)]
pub struct Node {
    pub kind: Kind,
    pub ins: Vec<WireId>,
    pub outs: Vec<WireId>,
    /// The innermost box containing the node; doors sit outside their box.
    pub level: Option<BoxId>,
}

#[derive(Clone, Debug)]
pub struct BoxInfo {
    pub parent: Option<BoxId>,
}

#[derive(Clone, Debug, Default)]
pub struct Net {
    pub nodes: Vec<Option<Node>>,
    pub wires: Vec<Option<Wire>>,
    pub boxes: Vec<Option<BoxInfo>>,
}

const NO_WIRE: WireId = usize::MAX;

impl Net {
    pub fn new() -> Net {
        Net::default()
    }

    pub fn node(&self, n: NodeId) -> &Node {
        self.nodes[n].as_ref().expect("live node")
    }

    pub fn node_mut(&mut self, n: NodeId) -> &mut Node {
        self.nodes[n].as_mut().expect("live node")
    }

    pub fn wire(&self, w: WireId) -> &Wire {
        self.wires[w].as_ref().expect("live wire")
    }

    pub fn wire_mut(&mut self, w: WireId) -> &mut Wire {
        self.wires[w].as_mut().expect("live wire")
    }

    pub fn node_ids(&self) -> Vec<NodeId> {
        (0..self.nodes.len()).filter(|&i| self.nodes[i].is_some()).collect()
    }

    pub fn wire_ids(&self) -> Vec<WireId> {
        (0..self.wires.len()).filter(|&i| self.wires[i].is_some()).collect()
    }

    pub fn box_ids(&self) -> Vec<BoxId> {
        (0..self.boxes.len()).filter(|&i| self.boxes[i].is_some()).collect()
    }

    pub fn node_count(&self) -> usize {
        self.nodes.iter().flatten().count()
    }

    pub fn count(&self, pred: impl Fn(&Kind) -> bool) -> usize {
        self.nodes.iter().flatten().filter(|n| pred(&n.kind)).count()
    }

    pub fn cut_count(&self) -> usize {
        self.count(|k| *k == Kind::Cut)
    }

    /// Adds a node whose conclusions are fresh open wires with the given
    /// formulas. Premises are filled in by `connect`.
    pub fn add_node(&mut self, kind: Kind, n_ins: usize, out_formulas: Vec<Formula>, level: Option<BoxId>) -> NodeId {
        let id = self.nodes.len();
        self.nodes.push(Some(Node {
            kind,
            ins: vec![NO_WIRE; n_ins],
            outs: vec![],
            level,
        }));
        for (p, f) in out_formulas.into_iter().enumerate() {
            let w = self.wires.len();
            self.wires.push(Some(Wire {
                formula: f,
                src: (id, p),
                dst: Dst::Open,
            }));
            self.node_mut(id).outs.push(w);
        }
        id
    }

    pub fn add_box(&mut self, parent: Option<BoxId>) -> BoxId {
        self.boxes.push(Some(BoxInfo { parent }));
        self.boxes.len() - 1
    }

    pub fn out(&self, n: NodeId, p: usize) -> WireId {
        self.node(n).outs[p]
    }

    /// Points `w` at `dst`, updating the receiving node.
    pub fn connect(&mut self, w: WireId, dst: Dst) {
        if let Dst::Node(n, p) = &dst {
            let (n, p) = (*n, *p);
            self.node_mut(n).ins[p] = w;
        }
        self.wire_mut(w).dst = dst;
    }

    /// Makes `from` take over the destination of `to`, which is removed.
    pub fn splice(&mut self, from: WireId, to: WireId) {
        let dst = self.wire(to).dst.clone();
        self.wires[to] = None;
        self.connect(from, dst);
    }

    pub fn remove_node(&mut self, n: NodeId) {
        self.nodes[n] = None;
    }

    pub fn remove_wire(&mut self, w: WireId) {
        self.wires[w] = None;
    }

    pub fn principal(&self, b: BoxId) -> NodeId {
        self.node_ids()
            .into_iter()
            .find(|&n| self.node(n).kind == Kind::PDoor(b))
            .expect("box has a principal door")
    }

    pub fn aux_doors(&self, b: BoxId) -> Vec<NodeId> {
        self.node_ids()
            .into_iter()
            .filter(|&n| self.node(n).kind == Kind::ADoor(b))
            .collect()
    }

    pub fn box_parent(&self, b: BoxId) -> Option<BoxId> {
        self.boxes[b].as_ref().expect("live box").parent
    }

    /// `b` and all boxes nested in it.
    pub fn box_subtree(&self, b: BoxId) -> BTreeSet<BoxId> {
        let mut out = BTreeSet::from([b]);
        loop {
            let before = out.len();
            for c in self.box_ids() {
                if let Some(p) = self.box_parent(c) {
                    if out.contains(&p) {
                        out.insert(c);
                    }
                }
            }
            if out.len() == before {
                return out;
            }
        }
    }

    /// Every node of a box: its contents at any depth and its doors.
    pub fn box_nodes(&self, b: BoxId) -> BTreeSet<NodeId> {
        let sub = self.box_subtree(b);
        self.node_ids()
            .into_iter()
            .filter(|&n| {
                let nd = self.node(n);
                nd.level.is_some_and(|l| sub.contains(&l)) || matches!(nd.kind, Kind::PDoor(c) | Kind::ADoor(c) if c == b)
            })
            .collect()
    }

    /// Copies a set of nodes with the wires among them. Boxes whose
    /// principal door is copied are copied too. Returns the node map and,
    /// for each wire leaving the set, its open copy.
    pub fn copy_nodes(&mut self, set: &BTreeSet<NodeId>) -> (BTreeMap<NodeId, NodeId>, BTreeMap<WireId, WireId>) {
        let mut bmap = BTreeMap::new();
        for &n in set {
            if let Kind::PDoor(b) = self.node(n).kind {
                let nb = self.add_box(None);
                bmap.insert(b, nb);
            }
        }
        for (&b, &nb) in &bmap {
            let p = self.box_parent(b);
            let np = p.map(|p| *bmap.get(&p).unwrap_or(&p));
            self.boxes[nb].as_mut().unwrap().parent = np;
        }
        let mut nmap = BTreeMap::new();
        for &n in set {
            let nd = self.node(n).clone();
            let kind = match nd.kind {
                Kind::PDoor(b) => Kind::PDoor(bmap[&b]),
                Kind::ADoor(b) => Kind::ADoor(*bmap.get(&b).unwrap_or(&b)),
                k => k,
            };
            let level = nd.level.map(|l| *bmap.get(&l).unwrap_or(&l));
            let fs = nd.outs.iter().map(|&w| self.wire(w).formula.clone()).collect();
            let nn = self.add_node(kind, nd.ins.len(), fs, level);
            nmap.insert(n, nn);
        }
        let mut external = BTreeMap::new();
        for &n in set {
            let outs = self.node(n).outs.clone();
            for (p, w) in outs.into_iter().enumerate() {
                let nw = self.out(nmap[&n], p);
                match self.wire(w).dst.clone() {
                    Dst::Node(m, q) if set.contains(&m) => self.connect(nw, Dst::Node(nmap[&m], q)),
                    _ => {
                        external.insert(w, nw);
                    }
                }
            }
        }
        (nmap, external)
    }

    /// Deletes a set of nodes and their internal wires. Returns the wires
    /// leaving the set; they are left dangling and must be reconnected or
    /// removed by the caller.
    pub fn delete_nodes(&mut self, set: &BTreeSet<NodeId>) -> Vec<WireId> {
        let mut leaving = Vec::new();
        for &n in set {
            for &w in &self.node(n).outs.clone() {
                match self.wire(w).dst {
                    Dst::Node(m, _) if set.contains(&m) => self.remove_wire(w),
                    _ => leaving.push(w),
                }
            }
        }
        for &n in set {
            if let Kind::PDoor(b) = self.node(n).kind {
                for c in self.box_subtree(b) {
                    self.boxes[c] = None;
                }
            }
        }
        for &n in set {
            self.remove_node(n);
        }
        leaving
    }

    /// The source node of the wire entering premise `p` of `n`.
    pub fn premise_src(&self, n: NodeId, p: usize) -> NodeId {
        self.wire(self.node(n).ins[p]).src.0
    }

    /// Labelled conclusions of the net.
    pub fn conclusions(&self) -> BTreeMap<Label, WireId> {
        let mut out = BTreeMap::new();
        for w in self.wire_ids() {
            if let Dst::Concl(l) = &self.wire(w).dst {
                out.insert(l.clone(), w);
            }
        }
        out
    }

    /// Checks wiring consistency, local formula rules, box structure and
    /// acyclicity.
    pub fn validate(&self) -> Result<(), Error> {
        let err = |m: String| Err(Error::Net(m));
        for w in self.wire_ids() {
            let wr = self.wire(w);
            let (s, p) = wr.src;
            match self.nodes.get(s).and_then(|n| n.as_ref()) {
                Some(n) if n.outs.get(p) == Some(&w) => {}
                _ => return err(format!("wire {} has a bad source", w)),
            }
            match &wr.dst {
                Dst::Node(d, q) => match self.nodes.get(*d).and_then(|n| n.as_ref()) {
                    Some(n) if n.ins.get(*q) == Some(&w) => {}
                    _ => return err(format!("wire {} has a bad destination", w)),
                },
                Dst::Open => return err(format!("wire {} is dangling", w)),
                Dst::Concl(_) => {}
            }
        }
        for n in self.node_ids() {
            let nd = self.node(n);
            for &w in nd.ins.iter().chain(nd.outs.iter()) {
                if self.wires.get(w).and_then(|x| x.as_ref()).is_none() {
                    return err(format!("node {} refers to a missing wire", n));
                }
            }
            let fi: Vec<&Formula> = nd.ins.iter().map(|&w| &self.wire(w).formula).collect();
            let fo: Vec<&Formula> = nd.outs.iter().map(|&w| &self.wire(w).formula).collect();
            let ok = match nd.kind {
                Kind::Ax => fi.is_empty() && fo.len() == 2 && *fo[0] == fo[1].neg() && fo[0].is_positive(),
                Kind::Cut => fo.is_empty() && fi.len() == 2 && *fi[0] == fi[1].neg() && fi[0].is_positive(),
                Kind::Weak => fi.is_empty() && fo.len() == 1 && !fo[0].is_positive(),
                Kind::Contr => fo.len() == 1 && !fo[0].is_positive() && fi.iter().all(|f| *f == fo[0]),
                Kind::Tensor => {
                    fi.len() == 2
                        && fo.len() == 1
                        && matches!(fi[0], Formula::Bang(_))
                        && *fo[0] == Formula::tensor(fi[0].clone(), fi[1].clone())
                }
                Kind::Par => {
                    fi.len() == 2
                        && fo.len() == 1
                        && matches!(fi[0], Formula::Quest(_))
                        && *fo[0] == Formula::par(fi[0].clone(), fi[1].clone())
                }
                Kind::Der => fi.len() == 1 && fo.len() == 1 && *fo[0] == Formula::quest(fi[0].clone()),
                Kind::PDoor(_) => fi.len() == 1 && fo.len() == 1 && *fo[0] == Formula::bang(fi[0].clone()),
                Kind::ADoor(_) => fi.len() == 1 && fo.len() == 1 && fo[0] == fi[0] && !fo[0].is_positive(),
            };
            if !ok {
                return err(format!("node {} ({}) breaks its formula rule", n, nd.kind.tag()));
            }
            // Levels: wires stay inside one box except through doors.
            for &w in &nd.ins {
                let s = self.node(self.wire(w).src.0);
                let want = match nd.kind {
                    Kind::PDoor(b) | Kind::ADoor(b) => Some(b),
                    _ => nd.level,
                };
                if s.level != want {
                    return err(format!("wire {} crosses a box boundary", w));
                }
            }
            if let Kind::PDoor(b) | Kind::ADoor(b) = nd.kind {
                match self.boxes.get(b).and_then(|x| x.as_ref()) {
                    Some(bi) if bi.parent == nd.level => {}
                    _ => return err(format!("door {} does not match its box", n)),
                }
            }
        }
        for b in self.box_ids() {
            let np = self.count(|k| *k == Kind::PDoor(b));
            if np != 1 {
                return err(format!("box {} has {} principal doors", b, np));
            }
        }
        // Acyclicity of the oriented graph, boxes included as their doors.
        let ids = self.node_ids();
        let mut indeg: BTreeMap<NodeId, usize> = ids.iter().map(|&n| (n, 0)).collect();
        for w in self.wire_ids() {
            if let Dst::Node(d, _) = self.wire(w).dst {
                *indeg.get_mut(&d).unwrap() += 1;
            }
        }
        let mut q: VecDeque<NodeId> = indeg.iter().filter(|(_, &d)| d == 0).map(|(&n, _)| n).collect();
        let mut seen = 0;
        while let Some(n) = q.pop_front() {
            seen += 1;
            for &w in &self.node(n).outs {
                if let Dst::Node(d, _) = self.wire(w).dst {
                    let e = indeg.get_mut(&d).unwrap();
                    *e -= 1;
                    if *e == 0 {
                        q.push_back(d);
                    }
                }
            }
        }
        if seen != ids.len() {
            return err("cycle".into());
        }
        Ok(())
    }

    /// Rebuilds the slabs without holes, preserving relative order.
    pub fn compact(&self) -> Net {
        let mut nmap = BTreeMap::new();
        let mut wmap = BTreeMap::new();
        let mut bmap = BTreeMap::new();
        for (i, b) in self.box_ids().into_iter().enumerate() {
            bmap.insert(b, i);
        }
        for (i, n) in self.node_ids().into_iter().enumerate() {
            nmap.insert(n, i);
        }
        for (i, w) in self.wire_ids().into_iter().enumerate() {
            wmap.insert(w, i);
        }
        let rb = |b: BoxId| bmap[&b];
        let mut out = Net::new();
        for b in self.box_ids() {
            out.boxes.push(Some(BoxInfo {
                parent: self.box_parent(b).map(rb),
            }));
        }
        for n in self.node_ids() {
            let nd = self.node(n);
            let kind = match nd.kind {
                Kind::PDoor(b) => Kind::PDoor(rb(b)),
                Kind::ADoor(b) => Kind::ADoor(rb(b)),
                k => k,
            };
            out.nodes.push(Some(Node {
                kind,
                ins: nd.ins.iter().map(|w| *wmap.get(w).unwrap_or(&NO_WIRE)).collect(),
                outs: nd.outs.iter().map(|w| wmap[w]).collect(),
                level: nd.level.map(rb),
            }));
        }
        for w in self.wire_ids() {
            let wr = self.wire(w);
            out.wires.push(Some(Wire {
                formula: wr.formula.clone(),
                src: (nmap[&wr.src.0], wr.src.1),
                dst: match &wr.dst {
                    Dst::Node(n, p) => Dst::Node(nmap[n], *p),
                    d => d.clone(),
                },
            }));
        }
        out
    }
}
