//! For an abelian group every `b ∈ G∖H` commutes with `H`, so the twist is
//! the identity on `Irr(H)` and `K̃_G(S^{1⊕λ})` vanishes. This walks every
//! abelian group in the catalogue and every surjection onto `{±1}`.
//!
//! ```text
//! cargo run --release --example abelian_triviality -- 32
//! ```

use std::time::Instant;

use equivk::character::{character_table, SignedGroup};
use equivk::group::{all_sign_homomorphisms, build_group, catalogue};
use equivk::ktheory::{has_central_coset_element, k_group_s1_lambda_in};

pub fn run_example(max_order: usize) -> equivk::Result<()> {
    let start = Instant::now();
    let (mut groups, mut pairs, mut nonzero) = (0, 0, 0);
    for entry in catalogue(max_order) {
        let g = build_group(&entry.spec)?;
        if !g.is_abelian() {
            continue;
        }
        let table = character_table(&g)?;
        let lambdas = all_sign_homomorphisms(&g);
        let mut ranks = Vec::with_capacity(lambdas.len());
        for lambda in &lambdas {
            let s = SignedGroup::with_table(table.clone(), lambda)?;
            assert!(has_central_coset_element(&s));
            let rank = k_group_s1_lambda_in(&s)?.rank;
            nonzero += usize::from(rank != 0);
            ranks.push(rank);
        }
        groups += 1;
        pairs += lambdas.len();
        if !lambdas.is_empty() {
            println!("{:<16} {} surjections, ranks {ranks:?}", entry.label, lambdas.len());
        }
    }
    println!(
        "{groups} abelian groups of order ≤ {max_order}, {pairs} surjections, {nonzero} nonzero ranks, {:.2?}",
        start.elapsed()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> equivk::Result<()> {
    let max_order = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(32);
    run_example(max_order)
}
