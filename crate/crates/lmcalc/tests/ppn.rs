use lmcalc::equiv::AxiomKind;
use lmcalc::gen::{gen_typed, Gen, Typed};
use lmcalc::lmu::call_cc_typed;
use lmcalc::ppn::{self, full_nf, mult_nf, net_equiv, trans_type, Net};
use lmcalc::reduce::{canon_redexes, lm_redexes, lm_step, meaningful_reducts, Rule};
use lmcalc::syntax::{Object, Type};
use lmcalc::typing::{check, NameCtx, VarCtx};
use lmcalc::parse_type;

fn net_of(o: &Object, t: &Typed) -> Net {
    let d = check(o, &t.gamma, &t.delta).unwrap_or_else(|e| panic!("{}: {}", o, e));
    let n = ppn::translate(&d);
    n.validate().unwrap_or_else(|e| panic!("{}: {}", o, e));
    n
}

#[test]
fn arrow_translation() {
    let t = parse_type("(i -> i) -> i").unwrap();
    assert_eq!(trans_type(&t).to_string(), "(?(!i tensor i^) par i)");
}

#[test]
fn call_cc_net_is_cut_free() {
    let a = Type::base("A");
    let b = Type::base("B");
    let o = Object::Term(call_cc_typed(&a, &b));
    let d = check(&o, &VarCtx::new(), &NameCtx::new()).unwrap();
    let n = ppn::translate(&d);
    n.validate().unwrap();
    assert_eq!(n.cut_count(), 0);
}

#[test]
fn translations_validate_and_normalise() {
    for seed in 0..300 {
        let t = gen_typed(seed, 14);
        let mut n = net_of(&t.obj, &t);
        mult_nf(&mut n);
        n.validate().unwrap_or_else(|e| panic!("mult {}: {}", t.obj, e));
        full_nf(&mut n, 10_000).unwrap_or_else(|e| panic!("full {}: {}", t.obj, e));
        n.validate().unwrap_or_else(|e| panic!("full {}: {}", t.obj, e));
        assert_eq!(n.cut_count(), 0);
        let c = ppn::struct_canon(&n);
        c.validate().unwrap_or_else(|e| panic!("canon {}: {}", t.obj, e));
        assert!(net_equiv(&n, &n.clone()));
    }
}

#[test]
fn equivalent_objects_have_equal_nets() {
    let mut g = Gen::new(5);
    let mut bad = Vec::new();
    for k in AxiomKind::WITH_REN {
        for _ in 0..15 {
            let (t, ax) = g.equiv_pair(k, 12, true).unwrap();
            let mut a = net_of(&t.obj, &t);
            let mut b = net_of(&ax.result, &t);
            mult_nf(&mut a);
            mult_nf(&mut b);
            if !net_equiv(&a, &b) {
                bad.push(format!("{}: {}  vs  {}", k, t.obj, ax.result));
            }
        }
    }
    assert!(bad.is_empty(), "{}", bad.join("\n"));
}

#[test]
fn reduction_steps_preserve_nets() {
    let mut bad = Vec::new();
    let mut n = 0;
    for seed in 0..400 {
        let t = gen_typed(seed, 14);
        let mut steps: Vec<(Rule, Object)> = Vec::new();
        for (r, p) in lm_redexes(&t.obj).into_iter().chain(canon_redexes(&t.obj)) {
            steps.push((r, lm_step(&t.obj, r, &p).unwrap()));
        }
        for (r, _, q) in meaningful_reducts(&t.obj) {
            steps.push((r, q));
        }
        for (r, q) in steps {
            let mut a = net_of(&t.obj, &t);
            let mut b = net_of(&q, &t);
            n += 1;
            if matches!(r, Rule::B | Rule::M | Rule::C | Rule::W) {
                let (mut a2, mut b2) = (a.clone(), b.clone());
                mult_nf(&mut a2);
                mult_nf(&mut b2);
                if !net_equiv(&a2, &b2) {
                    bad.push(format!("mult {}: {}  ->  {}", r, t.obj, q));
                }
            }
            full_nf(&mut a, 100_000).unwrap();
            full_nf(&mut b, 100_000).unwrap();
            if !net_equiv(&a, &b) {
                bad.push(format!("full {}: {}  ->  {}", r, t.obj, q));
            }
        }
    }
    assert!(n >= 200, "{}", n);
    assert!(bad.is_empty(), "{} of {}\n{}", bad.len(), n, bad[..bad.len().min(15)].join("\n"));
}

#[test]
fn distinct_normal_forms_have_distinct_nets() {
    let (g, d) = lmcalc::typing::parse_env("f:A -> A -> A, x:A, y:A").unwrap();
    let t = Typed { obj: lmcalc::parse_object("f x y").unwrap(), gamma: g, delta: d };
    let a = net_of(&t.obj, &t);
    let b = net_of(&lmcalc::parse_object("f y x").unwrap(), &t);
    let c = net_of(&lmcalc::parse_object("f x x").unwrap(), &t);
    assert!(!net_equiv(&a, &b));
    assert!(!net_equiv(&a, &c));
    assert!(net_equiv(&a, &net_of(&lmcalc::parse_object("f x y").unwrap(), &t)));
}
