//! Groups given by permutation generators, with `λ` given by explicit
//! generator signs.
//!
//! The dihedral group of the square appears as a subgroup of `Sym(4)`
//! generated by a 4-cycle and a reflection; sending the 4-cycle to `+1` and
//! the reflection to `−1` reproduces the rank-one answer of `D4`. A second
//! spec uses a different sign pattern on the same generators.
//!
//! ```text
//! cargo run --example custom_generators
//! ```

use equivk::character::SignedGroup;
use equivk::group::DEFAULT_ORDER_LIMIT;
use equivk::ktheory::{k_group_s1_lambda_in, k_group_s_lambda_in};
use equivk::spec::ProblemSpec;

pub fn run_example() -> equivk::Result<()> {
    let specs = [
        r#"{"generators": [[1, 2, 3, 0], [3, 2, 1, 0]], "lambda": {"generator_signs": [1, -1]}}"#,
        r#"{"generators": [[1, 2, 3, 0], [3, 2, 1, 0]], "lambda": {"generator_signs": [-1, -1]}}"#,
        r#"{"generators": [[1, 0, 2, 3, 4], [0, 1, 3, 4, 2]], "lambda": {"convention": "sign"}}"#,
        r#"{"family": "product", "factors": [{"family": "S", "n": 3}, {"family": "C", "n": 3}],
            "lambda": {"generator_signs": [-1, 1, 1]}}"#,
    ];
    for text in specs {
        let spec = ProblemSpec::parse(text)?;
        let g = spec.build(DEFAULT_ORDER_LIMIT)?;
        let lambda = spec.resolve_lambda(&g)?.expect("spec names λ");
        let s = SignedGroup::new(&g, &lambda)?;
        let k1 = k_group_s1_lambda_in(&s)?;
        let k0 = k_group_s_lambda_in(&s)?;
        println!(
            "{} (order {}), λ = {lambda}: rank K̃(S^(1+λ)) = {}, rank K̃(S^λ) = {}",
            spec.group,
            g.order(),
            k1.rank,
            k0.rank
        );
        for b in &k1.basis {
            println!("  {}", b.element);
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> equivk::Result<()> {
    run_example()
}
