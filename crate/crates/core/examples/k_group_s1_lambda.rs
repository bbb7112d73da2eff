//! `K̃_G(S^{1⊕λ})` as a free abelian group with its `R(G)`-module structure.
//!
//! The group is the image of `χ ↦ χ − ᵇχ` in `R(H)`, one generator per
//! free orbit of the twist; `G` acts through restriction to `H`, and the
//! product of any two classes is zero.
//!
//! ```text
//! cargo run --example k_group_s1_lambda
//! ```

use equivk::character::{SignedGroup, VirtualCharacter};
use equivk::group::{build_group, GroupSpec, SignHomomorphism};
use equivk::ktheory::{apply_matrix, k_group_s1_lambda_in, module_action};

fn show(spec: &GroupSpec, signs: &[i8]) -> equivk::Result<()> {
    let g = build_group(spec)?;
    let lambda = SignHomomorphism::from_generator_signs(&g, signs)?;
    let s = SignedGroup::new(&g, &lambda)?;
    let k = k_group_s1_lambda_in(&s)?;
    println!("{spec}, λ = {lambda}: rank {}", k.rank);
    for (n, b) in k.basis.iter().enumerate() {
        println!("  e{n} = {} ∈ R(H)", b.element);
    }
    if k.rank > 0 {
        for (i, m) in k.action.iter().enumerate() {
            println!("  χ{i} of G (degree {}) acts by {m:?}", s.g_table().degree(i));
        }
        // The action matrices agree with res_H(φ) ⊗ x computed in R(H).
        let x = vec![1; k.rank];
        let regular = VirtualCharacter::regular(s.g_table());
        let direct = module_action(&s, &k, &regular, &x)?;
        let by_matrix = apply_matrix(&k.action_of(&regular)?, &x);
        println!("  regular · (1,…,1) = {direct:?} (matrix: {by_matrix:?})");
        println!("  e0 · e0 = {:?}", k.ring_product(&x, &x)?);
    }
    Ok(())
}

pub fn run_example() -> equivk::Result<()> {
    show(&GroupSpec::Symmetric(3), &[-1, 1])?;
    show(&GroupSpec::Dihedral(4), &[1, -1])?;
    show(&GroupSpec::Quaternion, &[1, -1])?;
    show(&GroupSpec::Cyclic(6), &[-1])?;

    println!("\ndihedral groups of order 2n, reflections ↦ −1:");
    for n in 3..=12 {
        let g = build_group(&GroupSpec::Dihedral(n))?;
        let lambda = SignHomomorphism::from_generator_signs(&g, &[1, -1])?;
        let k = k_group_s1_lambda_in(&SignedGroup::new(&g, &lambda)?)?;
        println!("  n = {n:>2}: rank {} (⌊(n−1)/2⌋ = {})", k.rank, (n - 1) / 2);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> equivk::Result<()> {
    run_example()
}
