//! Every example runs to completion.

#[path = "../examples/groups.rs"]
mod groups;
#[path = "../examples/character_table.rs"]
mod character_table;
#[path = "../examples/induction_restriction.rs"]
mod induction_restriction;
#[path = "../examples/twist_orbits.rs"]
mod twist_orbits;
#[path = "../examples/k_group_s1_lambda.rs"]
mod k_group_s1_lambda;
#[path = "../examples/k_group_s_lambda.rs"]
mod k_group_s_lambda;
#[path = "../examples/abelian_triviality.rs"]
mod abelian_triviality;
#[path = "../examples/custom_generators.rs"]
mod custom_generators;
#[path = "../examples/json_report.rs"]
mod json_report;
#[path = "../examples/verification_suite.rs"]
mod verification_suite;

#[test]
fn groups_runs() {
    groups::run_example().unwrap();
}

#[test]
fn character_table_runs() {
    character_table::run_example().unwrap();
}

#[test]
fn induction_restriction_runs() {
    induction_restriction::run_example().unwrap();
}

#[test]
fn twist_orbits_runs() {
    twist_orbits::run_example().unwrap();
}

#[test]
fn k_group_s1_lambda_runs() {
    k_group_s1_lambda::run_example().unwrap();
}

#[test]
fn k_group_s_lambda_runs() {
    k_group_s_lambda::run_example().unwrap();
}

#[test]
fn abelian_triviality_runs() {
    abelian_triviality::run_example(16).unwrap();
}

#[test]
fn custom_generators_runs() {
    custom_generators::run_example().unwrap();
}

#[test]
fn json_report_runs() {
    json_report::run_example(json_report::DEFAULT_SPEC).unwrap();
    json_report::run_example(r#"{"family":"D","n":5,"lambda":{"convention":"reflection-sign"}}"#).unwrap();
}

#[test]
fn verification_suite_runs() {
    assert_eq!(verification_suite::run_example(12), 0);
}
