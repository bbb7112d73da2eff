//! The conjugation twist `χ ↦ ᵇχ` on `Irr(H)`, its orbits and their
//! isotropy, and independence of the choice of `b ∈ G∖H`.
//!
//! An orbit `{χ, ᵇχ}` of size two has isotropy `H` and contributes one copy
//! of `Z` to `K̃_G(S^{1⊕λ})`; a fixed character has isotropy `G` and
//! contributes nothing.
//!
//! ```text
//! cargo run --example twist_orbits
//! ```

use equivk::character::{Isotropy, SignedGroup};
use equivk::group::{build_group, GroupSpec, SignHomomorphism};
use equivk::ktheory::rank_splitting_report_in;

pub fn run_example() -> equivk::Result<()> {
    for spec in [
        GroupSpec::Dihedral(4),
        GroupSpec::Dihedral(5),
        GroupSpec::Dihedral(6),
        GroupSpec::Quaternion,
    ] {
        let g = build_group(&spec)?;
        // Dihedral: rotations ↦ +1, reflections ↦ −1. Q8: H = ⟨a⟩.
        let lambda = SignHomomorphism::from_generator_signs(&g, &[1, -1])?;
        let s = SignedGroup::new(&g, &lambda)?;
        println!("{spec}, λ = {lambda}, b = {}", g.label(s.b()));
        println!("  twist on Irr(H): {:?}", s.twist_permutation());
        let orbits = s.orbits();
        for (orbit, iso) in orbits.orbits.iter().zip(&orbits.isotropy) {
            let members: Vec<String> = orbit.iter().map(|i| format!("χ{i}")).collect();
            let iso = match iso {
                Isotropy::Kernel => "H",
                Isotropy::Whole => "G",
            };
            println!("  orbit {{{}}}: isotropy {iso}", members.join(", "));
        }
        let split = rank_splitting_report_in(&s);
        println!(
            "  (isotropy H, isotropy G, rank) = ({}, {}, {})",
            split.orbits_isotropy_h, split.orbits_isotropy_g, split.rank
        );
        let mut agree = true;
        for &b in s.non_kernel() {
            agree &= s.orbits_with(b)? == orbits;
        }
        println!("  same orbits for all {} choices of b: {agree}", s.non_kernel().len());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> equivk::Result<()> {
    run_example()
}
