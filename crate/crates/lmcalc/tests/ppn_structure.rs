//! Structural equivalence of hand-built nets: contraction trees and
//! weakenings are identified, genuinely different wirings are not.

use lmcalc::ppn::{net_equiv, struct_canon, Formula, Kind, Label, Net};
use lmcalc::ppn::net::Dst;
use lmcalc::{Name, Var};

fn i() -> Formula {
    Formula::Atom("i".into())
}

/// `n` axioms whose positive ends are conclusions `'a0 ...` and whose
/// negative ends go through dereliction; returns the `?i` wires.
fn derelicts(net: &mut Net, n: usize) -> Vec<usize> {
    (0..n)
        .map(|k| {
            let ax = net.add_node(Kind::Ax, 0, vec![i().neg(), i()], None);
            let pos = net.out(ax, 0);
            net.connect(pos, Dst::Concl(Label::Name(Name::new(&format!("a{}", k)))));
            let d = net.add_node(Kind::Der, 1, vec![Formula::quest(i())], None);
            let neg = net.out(ax, 1);
            net.connect(neg, Dst::Node(d, 0));
            net.out(d, 0)
        })
        .collect()
}

fn contract(net: &mut Net, ins: &[usize]) -> usize {
    let c = net.add_node(Kind::Contr, ins.len(), vec![Formula::quest(i())], None);
    for (p, &w) in ins.iter().enumerate() {
        net.connect(w, Dst::Node(c, p));
    }
    net.out(c, 0)
}

fn weaken(net: &mut Net) -> usize {
    let w = net.add_node(Kind::Weak, 0, vec![Formula::quest(i())], None);
    net.out(w, 0)
}

fn close(mut net: Net, w: usize) -> Net {
    net.connect(w, Dst::Concl(Label::Var(Var::new("x"))));
    net.validate().unwrap();
    net
}

fn left_nested() -> Net {
    let mut n = Net::new();
    let d = derelicts(&mut n, 3);
    let inner = contract(&mut n, &d[..2]);
    let out = contract(&mut n, &[inner, d[2]]);
    close(n, out)
}

#[test]
fn contraction_is_associative() {
    let mut n = Net::new();
    let d = derelicts(&mut n, 3);
    let inner = contract(&mut n, &d[1..]);
    let out = contract(&mut n, &[d[0], inner]);
    let right = close(n, out);
    assert!(net_equiv(&left_nested(), &right));
}

#[test]
fn contraction_is_commutative() {
    let mut n = Net::new();
    let d = derelicts(&mut n, 3);
    let out = contract(&mut n, &[d[2], d[0], d[1]]);
    assert!(net_equiv(&left_nested(), &close(n, out)));
}

#[test]
fn weakening_is_a_unit_for_contraction() {
    let mut n = Net::new();
    let d = derelicts(&mut n, 1);
    let w = weaken(&mut n);
    let out = contract(&mut n, &[w, d[0]]);
    let with_weak = close(n, out);
    let mut n = Net::new();
    let d = derelicts(&mut n, 1);
    let plain = close(n, d[0]);
    assert!(net_equiv(&with_weak, &plain));
    assert_eq!(struct_canon(&with_weak).count(|k| matches!(k, Kind::Weak | Kind::Contr)), 0);
}

#[test]
fn different_sharing_is_not_identified() {
    // x shared by a0, a1 and a2, against x shared by a0 and a1 only.
    let mut n = Net::new();
    let d = derelicts(&mut n, 3);
    let out = contract(&mut n, &d[..2]);
    n.connect(d[2], Dst::Concl(Label::Var(Var::new("y"))));
    let two = close(n, out);
    assert!(!net_equiv(&left_nested(), &two));
}
