//! Prints exact character tables and checks the two orthogonality relations
//! on them.
//!
//! Values live in `Q(z)` with `z = exp(2πi/m)`, `m` the group exponent, and
//! are printed as polynomials in `z`.
//!
//! ```text
//! cargo run --example character_table
//! ```

use equivk::character::{character_table, inner_product};
use equivk::group::{build_group, GroupSpec};
use equivk::report::{Report, ReportBody, TableReport};

pub fn run_example() -> equivk::Result<()> {
    for spec in [
        GroupSpec::Cyclic(3),
        GroupSpec::Symmetric(3),
        GroupSpec::Quaternion,
        GroupSpec::Alternating(4),
        GroupSpec::Dihedral(5),
    ] {
        let g = build_group(&spec)?;
        let table = character_table(&g)?;
        let report = Report::new(ReportBody::Chartab(TableReport::new(&spec.to_string(), &table)));
        print!("{}", report.to_text(Some(&table)));

        let degree_squares: usize = table.degrees().iter().map(|d| d * d).sum();
        let mut orthonormal = true;
        for i in 0..table.len() {
            for j in 0..table.len() {
                let ip = inner_product(&table.irreducible(i), &table.irreducible(j))?;
                orthonormal &= ip.as_integer() == Some((i == j) as i64);
            }
        }
        println!("Σ d² = {degree_squares} = |G|: {}", degree_squares == g.order());
        println!("⟨χi, χj⟩ = δij: {orthonormal}\n");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> equivk::Result<()> {
    run_example()
}
