//! Runs every check over the built-in groups up to a given order and prints
//! a one-line summary per group.
//!
//! ```text
//! cargo run --release --example verification_suite -- 32
//! ```

use std::collections::BTreeMap;
use std::time::Instant;

use equivk::group::catalogue;
use equivk::verification::{run_suite, Status, SuiteOptions};

pub fn run_example(max_order: usize) -> usize {
    let entries = catalogue(max_order);
    let start = Instant::now();
    let results = run_suite(&entries, &SuiteOptions::default());
    let elapsed = start.elapsed();

    let mut per_group: BTreeMap<usize, (String, usize, usize, usize)> = BTreeMap::new();
    let position = |label: &str| entries.iter().position(|e| e.label == label).unwrap_or(usize::MAX);
    for r in &results {
        let slot = per_group.entry(position(&r.group)).or_insert((r.group.clone(), 0, 0, 0));
        match r.status {
            Status::Pass => slot.1 += 1,
            Status::Fail => slot.2 += 1,
            Status::Info => slot.3 += 1,
        }
    }
    for (label, pass, fail, info) in per_group.values() {
        println!("{label:<12} pass {pass:>4}  fail {fail:>2}  info {info:>2}");
    }
    for r in results.iter().filter(|r| r.status == Status::Fail) {
        println!("FAIL {} {} {:?}: {}", r.check, r.group, r.lambda, r.details);
    }
    let failures = results.iter().filter(|r| r.status == Status::Fail).count();
    println!(
        "{} groups, {} checks, {failures} failures in {:.2?}",
        per_group.len(),
        results.len(),
        elapsed
    );
    failures
}

#[allow(dead_code)]
fn main() {
    let max_order: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(24);
    if run_example(max_order) > 0 {
        std::process::exit(1);
    }
}
