//! Builds a few groups, lists their conjugacy classes, and enumerates the
//! surjections `λ: G → {±1}` with their kernels.
//!
//! ```text
//! cargo run --example groups
//! ```

use equivk::group::{
    all_sign_homomorphisms, build_group, conjugacy_classes, kernel_embedding, GroupSpec,
};

pub fn run_example() -> equivk::Result<()> {
    let specs = [
        GroupSpec::Cyclic(4),
        GroupSpec::Dihedral(4),
        GroupSpec::Quaternion,
        GroupSpec::Symmetric(3),
        GroupSpec::direct_product(GroupSpec::Cyclic(2), GroupSpec::Cyclic(2)),
    ];
    for spec in specs {
        let g = build_group(&spec)?;
        let classes = conjugacy_classes(&g);
        let gens: Vec<&str> = g.generators().iter().map(|&x| g.label(x)).collect();
        println!("{spec}: order {}, generators {}", g.order(), gens.join(", "));
        for j in 0..classes.len() {
            let members: Vec<&str> = classes.class(j).iter().map(|&x| g.label(x)).collect();
            println!(
                "  class {j}: order {}, size {}: {{{}}}",
                classes.element_order(j),
                classes.size(j),
                members.join(", ")
            );
        }
        for lambda in all_sign_homomorphisms(&g) {
            let h = kernel_embedding(&g, &lambda)?;
            let kernel: Vec<&str> = h.inclusion().iter().map(|&x| g.label(x)).collect();
            println!("  λ = {lambda}: H = {{{}}}", kernel.join(", "));
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> equivk::Result<()> {
    run_example()
}
