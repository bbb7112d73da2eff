//! Reports survive serialization exactly.

use proptest::prelude::*;

use equivk::character::{character_table, SignedGroup};
use equivk::group::{all_sign_homomorphisms, build_group, GroupSpec};
use equivk::ktheory::{k_group_s1_lambda_in, k_group_s_lambda_in, rank_splitting_report_in};
use equivk::report::{KGroupReport, Report, ReportBody, TableReport};
use equivk::verification::lambda_label;

fn family() -> impl Strategy<Value = GroupSpec> {
    let simple = prop_oneof![
        (1usize..=24).prop_map(GroupSpec::Cyclic),
        (1usize..=12).prop_map(GroupSpec::Dihedral),
        Just(GroupSpec::Quaternion),
        (2usize..=4).prop_map(GroupSpec::Symmetric),
        (3usize..=4).prop_map(GroupSpec::Alternating),
    ];
    prop_oneof![
        3 => simple.clone(),
        1 => (simple, 1usize..=4).prop_map(|(a, n)| GroupSpec::direct_product(a, GroupSpec::Cyclic(n))),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn kgroup_reports_round_trip(spec in family(), pick in any::<prop::sample::Index>(), s1 in any::<bool>()) {
        prop_assume!(spec.expected_order().unwrap() <= 96);
        let g = build_group(&spec).unwrap();
        let lambdas = all_sign_homomorphisms(&g);
        prop_assume!(!lambdas.is_empty());
        let lambda = pick.get(&lambdas);
        let s = SignedGroup::new(&g, lambda).unwrap();
        let (label, l) = (spec.to_string(), lambda_label(lambda));
        let body = if s1 {
            KGroupReport::from_s1_lambda(&label, &l, &k_group_s1_lambda_in(&s).unwrap(), rank_splitting_report_in(&s))
        } else {
            KGroupReport::from_s_lambda(&label, &l, &k_group_s_lambda_in(&s).unwrap())
        };
        let report = Report::new(ReportBody::Kgroup(body.clone()));
        let json = report.to_json();
        let back = Report::from_json(&json).unwrap();
        prop_assert_eq!(&back, &report);
        prop_assert_eq!(back.to_json(), json);
        let ReportBody::Kgroup(k) = back.body else { panic!("kgroup report") };
        prop_assert_eq!(k.rank, body.rank);
        prop_assert_eq!(&k.action, &body.action);
        let coeffs = |r: &KGroupReport| r.basis.iter().map(|b| b.coefficients.clone()).collect::<Vec<_>>();
        prop_assert_eq!(coeffs(&k), coeffs(&body));
    }

    #[test]
    fn table_reports_round_trip(spec in family()) {
        prop_assume!(spec.expected_order().unwrap() <= 96);
        let t = character_table(&build_group(&spec).unwrap()).unwrap();
        let report = Report::new(ReportBody::Chartab(TableReport::new(&spec.to_string(), &t)));
        let json = report.to_json();
        prop_assert_eq!(Report::from_json(&json).unwrap(), report);
        // Rebuilding from scratch gives the same bytes.
        let again = character_table(&build_group(&spec).unwrap()).unwrap();
        prop_assert_eq!(Report::new(ReportBody::Chartab(TableReport::new(&spec.to_string(), &again))).to_json(), json);
    }
}
