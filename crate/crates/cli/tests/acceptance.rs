//! Runs every acceptance property once and prints a pass/fail line with its
//! runtime and limit.

#[path = "../../core/tests/common/mod.rs"]
mod common;
#[allow(dead_code)]
mod golden;

use std::time::{Duration, Instant};

use common::criteria::{self, Outcome};

#[test]
fn acceptance() {
    let list: [(&str, fn() -> Outcome, u64); 9] = [
        ("1 dickson identities", criteria::dickson_suite, 5),
        ("2 dickson sum product", criteria::dickson_sum_product, 5),
        ("3 factor formula identities", criteria::factor_formula_identities, 10),
        ("4 oracle agreement", criteria::oracle_agreement, 60),
        ("5 frobenius paths", criteria::frobenius_paths, 5),
        ("6 construct/classify round trip", criteria::round_trips, 30),
        ("7 pgl2 suite", criteria::pgl2_suite, 5),
        ("8 decomposition", criteria::decompositions, 5),
        ("9 cli golden files", golden::check_goldens, 2),
    ];
    let mut failed = Vec::new();
    for (name, run, limit) in list {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let in_time = took <= Duration::from_secs(limit);
        let (status, detail) = match (&outcome, in_time) {
            (Ok(s), true) => ("PASS", s.clone()),
            (Ok(s), false) => ("FAIL", format!("{s}; over the {limit} s limit")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        println!("[{status}] criterion {name}: {:.2} s (limit {limit} s): {detail}", took.as_secs_f64());
        if status == "FAIL" {
            failed.push(name);
        }
    }
    assert!(failed.is_empty(), "failed: {failed:?}");
}
