//! Isomorphism of nets up to node identities, with labelled conclusions
//! fixed. Colour refinement on the disjoint union, then individualisation
//! with backtracking; a candidate bijection is always checked edge by edge.

use std::collections::BTreeMap;

use super::net::*;

struct Graph {
    colour: Vec<String>,
    edges: Vec<(usize, usize, String)>,
}

fn graph(net: &Net) -> Graph {
    let net = net.compact();
    let n = net.nodes.len();
    let mut colour: Vec<String> = net.nodes.iter().flatten().map(|nd| nd.kind.tag().to_string()).collect();
    let concls: Vec<Label> = net.conclusions().into_keys().collect();
    let cidx: BTreeMap<&Label, usize> = concls.iter().enumerate().map(|(i, l)| (l, n + i)).collect();
    colour.extend(concls.iter().map(|l| format!("concl {:?}", l)));
    let mut edges = Vec::new();
    for w in net.wire_ids() {
        let wr = net.wire(w);
        let (s, sp) = wr.src;
        let (d, dp) = match &wr.dst {
            Dst::Node(d, p) => {
                let p = if net.node(*d).kind == Kind::Contr { 0 } else { *p };
                (*d, p)
            }
            Dst::Concl(l) => (cidx[l], 0),
            Dst::Open => continue,
        };
        edges.push((s, d, format!("{}>{} {}", sp, dp, wr.formula)));
    }
    for (i, nd) in net.nodes.iter().flatten().enumerate() {
        if let Some(b) = nd.level {
            edges.push((i, net.principal(b), "in".into()));
        }
        if let Kind::ADoor(b) = nd.kind {
            edges.push((i, net.principal(b), "aux".into()));
        }
    }
    Graph { colour, edges }
}

struct Joint {
    n1: usize,
    outs: Vec<Vec<(usize, usize)>>,
    ins: Vec<Vec<(usize, usize)>>,
}

type Sig = (usize, Vec<(usize, usize)>, Vec<(usize, usize)>);

fn refine(j: &Joint, col: &mut Vec<usize>) {
    let mut classes = col.iter().collect::<std::collections::BTreeSet<_>>().len();
    loop {
        let sigs: Vec<Sig> = (0..col.len())
            .map(|v| {
                let mut o: Vec<(usize, usize)> = j.outs[v].iter().map(|&(e, u)| (e, col[u])).collect();
                let mut i: Vec<(usize, usize)> = j.ins[v].iter().map(|&(e, u)| (e, col[u])).collect();
                o.sort_unstable();
                i.sort_unstable();
                (col[v], o, i)
            })
            .collect();
        let mut ids: BTreeMap<&Sig, usize> = BTreeMap::new();
        for s in &sigs {
            ids.insert(s, 0);
        }
        for (k, v) in ids.values_mut().enumerate() {
            *v = k;
        }
        let new: Vec<usize> = sigs.iter().map(|s| ids[s]).collect();
        let c = ids.len();
        *col = new;
        if c == classes {
            return;
        }
        classes = c;
    }
}

fn balanced(j: &Joint, col: &[usize]) -> bool {
    let mut h: BTreeMap<usize, i64> = BTreeMap::new();
    for (v, &c) in col.iter().enumerate() {
        *h.entry(c).or_default() += if v < j.n1 { 1 } else { -1 };
    }
    h.values().all(|&x| x == 0)
}

fn search(j: &Joint, col: Vec<usize>, e1: &[(usize, usize, usize)], e2: &[(usize, usize, usize)]) -> bool {
    if !balanced(j, &col) {
        return false;
    }
    let mut members: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (v, &c) in col.iter().enumerate() {
        members.entry(c).or_default().push(v);
    }
    let pick = members.values().filter(|m| m.len() > 2).min_by_key(|m| m.len());
    match pick {
        None => {
            let mut map = vec![0; j.n1];
            for m in members.values() {
                map[m[0]] = m[1] - j.n1;
            }
            let mut a: Vec<(usize, usize, usize)> = e1.iter().map(|&(s, d, e)| (map[s], map[d], e)).collect();
            let mut b = e2.to_vec();
            a.sort_unstable();
            b.sort_unstable();
            a == b
        }
        Some(m) => {
            let v = m[0];
            let fresh = col.iter().max().map_or(0, |x| x + 1);
            for &w in m.iter().filter(|&&w| w >= j.n1) {
                let mut c = col.clone();
                c[v] = fresh;
                c[w] = fresh;
                refine(j, &mut c);
                if search(j, c, e1, e2) {
                    return true;
                }
            }
            false
        }
    }
}

/// Whether two nets are isomorphic, preserving node kinds, port positions
/// (contraction premises are unordered), formulas, box structure and
/// conclusion labels.
pub fn isomorphic(a: &Net, b: &Net) -> bool {
    let (g1, g2) = (graph(a), graph(b));
    if g1.colour.len() != g2.colour.len() || g1.edges.len() != g2.edges.len() {
        return false;
    }
    let mut vcol: BTreeMap<&str, usize> = BTreeMap::new();
    let mut ecol: BTreeMap<&str, usize> = BTreeMap::new();
    for c in g1.colour.iter().chain(&g2.colour) {
        let k = vcol.len();
        vcol.entry(c).or_insert(k);
    }
    for (_, _, e) in g1.edges.iter().chain(&g2.edges) {
        let k = ecol.len();
        ecol.entry(e).or_insert(k);
    }
    let n1 = g1.colour.len();
    let total = n1 + g2.colour.len();
    let mut j = Joint {
        n1,
        outs: vec![vec![]; total],
        ins: vec![vec![]; total],
    };
    let e1: Vec<(usize, usize, usize)> = g1.edges.iter().map(|(s, d, e)| (*s, *d, ecol[e.as_str()])).collect();
    let e2: Vec<(usize, usize, usize)> = g2.edges.iter().map(|(s, d, e)| (*s, *d, ecol[e.as_str()])).collect();
    for &(s, d, e) in &e1 {
        j.outs[s].push((e, d));
        j.ins[d].push((e, s));
    }
    for &(s, d, e) in &e2 {
        j.outs[s + n1].push((e, d + n1));
        j.ins[d + n1].push((e, s + n1));
    }
    let mut col: Vec<usize> = g1.colour.iter().chain(&g2.colour).map(|c| vcol[c.as_str()]).collect();
    refine(&j, &mut col);
    search(&j, col, &e1, &e2)
}
