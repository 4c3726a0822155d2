//! The acceptance criteria, one printed verdict line each.

use std::time::Instant;

use lmcalc::equiv::Bounds;
use lmcalc::harness::{self, Report};

fn run(n: usize, f: impl FnOnce() -> Report) -> bool {
    let t = Instant::now();
    let r = f();
    let verdict = if r.passed() { "PASS" } else { "FAIL" };
    println!("criterion {:>2}: {} | {} [{:.1}s]", n, verdict, r.summary(), t.elapsed().as_secs_f64());
    if !r.passed() {
        println!("{}", r);
    }
    r.passed()
}

#[test]
fn acceptance() {
    let b = Bounds::default();
    let results = [
        run(1, || harness::bisim_check(1, 510, 12, b)),
        run(2, harness::sigma8_counterexample),
        run(3, || harness::sigma_correspondence(3, 20, 10, b)),
        run(4, || harness::confluence_check(4, 300, 20, 10_000)),
        run(5, || harness::canon_check(5, 1000, 20)),
        run(6, || harness::subject_reduction(6, 1000, 20)),
        run(7, harness::worked_examples),
        run(8, || harness::ppn_soundness(8, 15, 14)),
        run(9, || harness::ppn_simulation(9, 400, 18, 100_000)),
        run(10, || harness::commutation_check(10, 1000, 16)),
        run(11, || harness::permutation_check(11, 100, 14, b)),
    ];
    let failed: Vec<usize> = (1..=11).filter(|i| !results[i - 1]).collect();
    assert!(failed.is_empty(), "failed criteria: {:?}", failed);
}
