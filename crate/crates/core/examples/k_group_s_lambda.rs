//! `K̃_G(S^λ)` as the ideal of `R(G)` generated by `1 − λ_ℂ`.
//!
//! Multiplication by `λ_ℂ` pairs up the irreducibles of `G`; each pair
//! `{φ, λ_ℂφ}` gives one free generator `φ − λ_ℂφ`, and each fixed
//! irreducible is killed by `1 − λ_ℂ`.
//!
//! ```text
//! cargo run --example k_group_s_lambda
//! ```

use equivk::character::{SignedGroup, VirtualCharacter};
use equivk::group::{build_group, GroupSpec, SignHomomorphism};
use equivk::ktheory::{k_group_s_lambda_in, lambda_multiplication};

pub fn run_example() -> equivk::Result<()> {
    for (spec, signs) in [
        (GroupSpec::Cyclic(2), vec![-1]),
        (GroupSpec::Cyclic(4), vec![-1]),
        (GroupSpec::Symmetric(3), vec![-1, 1]),
        (GroupSpec::Dihedral(4), vec![1, -1]),
    ] {
        let g = build_group(&spec)?;
        let lambda = SignHomomorphism::from_generator_signs(&g, &signs)?;
        let s = SignedGroup::new(&g, &lambda)?;
        let ideal = k_group_s_lambda_in(&s)?;
        println!(
            "{spec}, λ = {lambda}: λ_ℂ = χ{}, φ ↦ λ_ℂφ is {:?}, rank {}",
            s.lambda_character_index(),
            lambda_multiplication(&s)?,
            ideal.rank
        );
        for (n, b) in ideal.basis.iter().enumerate() {
            println!("  e{n} = {}", b.element);
        }
        // (1 − λ_ℂ)·χ lies in the ideal for every irreducible χ.
        let one_minus_lambda = &VirtualCharacter::trivial(s.g_table()) - &s.lambda_character();
        for i in 0..s.g_table().len() {
            let y = one_minus_lambda.tensor(&VirtualCharacter::irreducible(s.g_table(), i))?;
            println!("  (1 − λ_ℂ)χ{i} = {y} = {:?} in the basis", ideal.coordinates(&y)?);
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> equivk::Result<()> {
    run_example()
}
