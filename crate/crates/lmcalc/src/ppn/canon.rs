//! Structural normalisation of contractions and weakenings.
//!
//! Contractions are flattened and pushed out of boxes, weakenings are
//! absorbed by contractions, hoisted out of boxes and dropped when they
//! only produce a free identifier's conclusion.

use super::net::*;

fn dst_node(net: &Net, w: WireId) -> Option<(NodeId, usize)> {
    match net.wire(w).dst {
        Dst::Node(n, p) => Some((n, p)),
        _ => None,
    }
}

fn set_ins(net: &mut Net, n: NodeId, ins: Vec<WireId>) {
    net.node_mut(n).ins = ins.clone();
    for (i, w) in ins.into_iter().enumerate() {
        net.connect(w, Dst::Node(n, i));
    }
}

fn step(net: &mut Net) -> bool {
    for n in net.node_ids() {
        if net.nodes[n].is_none() {
            continue;
        }
        let nd = net.node(n).clone();
        match nd.kind {
            Kind::Contr => {
                // Flatten nested contractions and drop weakened premises.
                let mut ins = Vec::new();
                let mut changed = false;
                for &w in &nd.ins {
                    let s = net.wire(w).src.0;
                    match net.node(s).kind {
                        Kind::Contr if net.node(s).level == nd.level => {
                            ins.extend(net.node(s).ins.clone());
                            net.remove_node(s);
                            net.remove_wire(w);
                            changed = true;
                        }
                        Kind::Weak => {
                            net.remove_node(s);
                            net.remove_wire(w);
                            changed = true;
                        }
                        _ => ins.push(w),
                    }
                }
                if changed {
                    set_ins(net, n, ins);
                    return true;
                }
                match nd.ins.len() {
                    0 => {
                        net.node_mut(n).kind = Kind::Weak;
                        return true;
                    }
                    1 => {
                        net.remove_node(n);
                        net.splice(nd.ins[0], nd.outs[0]);
                        return true;
                    }
                    _ => {}
                }
                if let Some((d, _)) = dst_node(net, nd.outs[0]) {
                    if let Kind::ADoor(b) = net.node(d).kind {
                        if nd.level == Some(b) {
                            let dl = net.node(d).level;
                            let dout = net.out(d, 0);
                            let fm = net.wire(dout).formula.clone();
                            let k = net.add_node(Kind::Contr, nd.ins.len(), vec![fm.clone()], dl);
                            let ko = net.out(k, 0);
                            net.remove_node(d);
                            net.splice(ko, dout);
                            for (i, &w) in nd.ins.iter().enumerate() {
                                let ad = net.add_node(Kind::ADoor(b), 1, vec![fm.clone()], dl);
                                let ao = net.out(ad, 0);
                                net.connect(w, Dst::Node(ad, 0));
                                net.connect(ao, Dst::Node(k, i));
                            }
                            net.remove_node(n);
                            net.remove_wire(nd.outs[0]);
                            return true;
                        }
                    }
                }
            }
            Kind::Weak => {
                let w = nd.outs[0];
                match net.wire(w).dst.clone() {
                    Dst::Node(d, _) => {
                        if let Kind::ADoor(b) = net.node(d).kind {
                            if nd.level == Some(b) {
                                net.remove_node(n);
                                net.remove_wire(w);
                                let dn = net.node_mut(d);
                                dn.kind = Kind::Weak;
                                dn.ins.clear();
                                return true;
                            }
                        }
                    }
                    Dst::Concl(Label::Var(_) | Label::Name(_)) => {
                        net.remove_node(n);
                        net.remove_wire(w);
                        return true;
                    }
                    _ => {}
                }
            }
            _ => {}
        }
    }
    false
}

/// Applies the structural rules to a fixpoint and compacts the result.
pub fn struct_canon(net: &Net) -> Net {
    let mut n = net.clone();
    while step(&mut n) {}
    n.compact()
}
