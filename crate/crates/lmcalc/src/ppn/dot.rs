//! Graphviz export. Boxes are drawn as nested clusters.

use std::collections::BTreeMap;
use std::fmt::Write;

use super::net::*;

pub fn to_dot(net: &Net) -> String {
    let mut s = String::from("digraph net {\n  node [shape=box, fontname=\"monospace\"];\n");
    let mut children: BTreeMap<Option<BoxId>, Vec<BoxId>> = BTreeMap::new();
    for b in net.box_ids() {
        children.entry(net.box_parent(b)).or_default().push(b);
    }
    let mut members: BTreeMap<Option<BoxId>, Vec<NodeId>> = BTreeMap::new();
    for n in net.node_ids() {
        members.entry(net.node(n).level).or_default().push(n);
    }
    fn emit(
        net: &Net,
        s: &mut String,
        at: Option<BoxId>,
        depth: usize,
        children: &BTreeMap<Option<BoxId>, Vec<BoxId>>,
        members: &BTreeMap<Option<BoxId>, Vec<NodeId>>,
    ) {
        let pad = "  ".repeat(depth + 1);
        for &n in members.get(&at).into_iter().flatten() {
            let _ = writeln!(s, "{}n{} [label=\"{}\"];", pad, n, net.node(n).kind.tag());
        }
        for &b in children.get(&at).into_iter().flatten() {
            let _ = writeln!(s, "{}subgraph cluster_{} {{", pad, b);
            emit(net, s, Some(b), depth + 1, children, members);
            let _ = writeln!(s, "{}}}", pad);
        }
    }
    emit(net, &mut s, None, 0, &children, &members);
    for w in net.wire_ids() {
        let wr = net.wire(w);
        let label = wr.formula.to_string().replace('"', "\\\"");
        match &wr.dst {
            Dst::Node(d, _) => {
                let _ = writeln!(s, "  n{} -> n{} [label=\"{}\"];", wr.src.0, d, label);
            }
            Dst::Concl(l) => {
                let _ = writeln!(s, "  c{} [shape=plaintext, label=\"{}\"];", w, l);
                let _ = writeln!(s, "  n{} -> c{} [label=\"{}\"];", wr.src.0, w, label);
            }
            Dst::Open => {}
        }
    }
    s.push_str("}\n");
    s
}
