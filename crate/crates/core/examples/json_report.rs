//! Parses a JSON problem spec, computes both K-groups, and prints the
//! machine-readable reports. Re-parsing a report gives back the same rank,
//! basis vectors and action matrices.
//!
//! ```text
//! cargo run --example json_report -- '{"family":"D","n":5,"lambda":{"convention":"reflection-sign"}}'
//! ```

use equivk::character::SignedGroup;
use equivk::group::DEFAULT_ORDER_LIMIT;
use equivk::ktheory::{k_group_s1_lambda_in, k_group_s_lambda_in, rank_splitting_report_in};
use equivk::report::{KGroupReport, Report, ReportBody};
use equivk::spec::ProblemSpec;
use equivk::verification::lambda_label;

pub const DEFAULT_SPEC: &str = r#"{"family": "S", "n": 3, "lambda": {"convention": "sign"}}"#;

pub fn run_example(spec_text: &str) -> equivk::Result<()> {
    let spec = ProblemSpec::parse(spec_text)?;
    let g = spec.build(DEFAULT_ORDER_LIMIT)?;
    let lambda = spec
        .resolve_lambda(&g)?
        .expect("the spec names a sign homomorphism");
    let s = SignedGroup::new(&g, &lambda)?;
    let (label, l) = (spec.group.to_string(), lambda_label(&lambda));

    let reports = [
        KGroupReport::from_s1_lambda(&label, &l, &k_group_s1_lambda_in(&s)?, rank_splitting_report_in(&s)),
        KGroupReport::from_s_lambda(&label, &l, &k_group_s_lambda_in(&s)?),
    ];
    for body in reports {
        let report = Report::new(ReportBody::Kgroup(body));
        let json = report.to_json();
        print!("{json}");
        let back = Report::from_json(&json)?;
        assert_eq!(back, report);
        if let ReportBody::Kgroup(k) = &back.body {
            println!("# re-parsed: {} rank {}, basis {:?}", k.sphere, k.rank,
                k.basis.iter().map(|b| &b.coefficients).collect::<Vec<_>>());
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> equivk::Result<()> {
    let arg = std::env::args().nth(1);
    run_example(arg.as_deref().unwrap_or(DEFAULT_SPEC))
}
