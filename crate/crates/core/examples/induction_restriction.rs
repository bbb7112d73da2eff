//! Restriction and induction between `G` and the kernel `H` of a sign
//! homomorphism, with Frobenius reciprocity, the projection formula and the
//! index-two Mackey formula checked on every pair of irreducibles.
//!
//! ```text
//! cargo run --example induction_restriction
//! ```

use equivk::character::{SignedGroup, VirtualCharacter};
use equivk::group::{build_group, GroupSpec, SignHomomorphism};

pub fn run_example() -> equivk::Result<()> {
    // S3 with the sign of a permutation: H = A3 ≅ C3.
    let g = build_group(&GroupSpec::Symmetric(3))?;
    let sign = SignHomomorphism::from_generator_signs(&g, &[-1, 1])?;
    let s = SignedGroup::new(&g, &sign)?;
    let (gt, ht) = (s.g_table().clone(), s.h_table().clone());

    for i in 0..gt.len() {
        let phi = VirtualCharacter::irreducible(&gt, i);
        println!("res χ{i} of S3 = {} in R(C3)", s.restrict(&phi)?);
    }
    for i in 0..ht.len() {
        let chi = VirtualCharacter::irreducible(&ht, i);
        println!("ind χ{i} of C3 = {} in R(S3)", s.induce(&chi)?);
    }

    // ⟨ind χ, φ⟩_G = ⟨χ, res φ⟩_H: multiplicities are coefficients.
    let mut frobenius = true;
    // φ ⊗ ind χ = ind(res φ ⊗ χ)
    let mut projection = true;
    // res ind χ = χ + ᵇχ
    let mut mackey = true;
    for j in 0..gt.len() {
        let phi = VirtualCharacter::irreducible(&gt, j);
        let res_phi = s.restrict(&phi)?;
        for i in 0..ht.len() {
            let chi = VirtualCharacter::irreducible(&ht, i);
            let ind_chi = s.induce(&chi)?;
            frobenius &= ind_chi.coefficients()[j] == res_phi.coefficients()[i];
            projection &= phi.tensor(&ind_chi)? == s.induce(&res_phi.tensor(&chi)?)?;
            mackey &= s.restrict(&ind_chi)? == &chi + &s.twist(&chi)?;
        }
    }
    println!("Frobenius reciprocity: {frobenius}");
    println!("projection formula:    {projection}");
    println!("Mackey formula:        {mackey}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> equivk::Result<()> {
    run_example()
}
