//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails. Criteria run one after another so that the timing
//! bounds measure a single workload.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use equivk::character::{character_table, SignedGroup, VirtualCharacter};
use equivk::group::{all_sign_homomorphisms, build_group, catalogue, CatalogueEntry, GroupSpec, SignHomomorphism};
use equivk::ktheory::{k_group_s1_lambda_in, k_group_s_lambda_in};
use equivk::report::{Report, ReportBody, VerifyReport};
use equivk::verification::{
    check_ideal_lattice, check_rank_formula, run_suite, CheckResult, Status, SuiteOptions,
};

type Outcome = Result<String, String>;

fn setting(spec: GroupSpec, signs: &[i8]) -> Result<SignedGroup, String> {
    let g = build_group(&spec).map_err(|e| e.to_string())?;
    let lambda = SignHomomorphism::from_generator_signs(&g, signs).map_err(|e| e.to_string())?;
    SignedGroup::new(&g, &lambda).map_err(|e| e.to_string())
}

fn ensure(ok: bool, message: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(message())
    }
}

fn within(elapsed: Duration, limit_secs: u64) -> Result<(), String> {
    ensure(elapsed < Duration::from_secs(limit_secs), || {
        format!("took {elapsed:.2?}, limit {limit_secs} s")
    })
}

fn summarize(results: &[CheckResult]) -> Result<usize, String> {
    let failed: Vec<String> = results
        .iter()
        .filter(|r| r.status == Status::Fail)
        .take(5)
        .map(|r| format!("{} {} {:?}: {}", r.check, r.group, r.lambda, r.details))
        .collect();
    if failed.is_empty() {
        Ok(results.len())
    } else {
        Err(failed.join("; "))
    }
}

fn options(tables: bool, identities: bool, structure: bool) -> SuiteOptions {
    SuiteOptions {
        tables,
        identities,
        structure,
        ..SuiteOptions::default()
    }
}

/// 1. Every surjection of every abelian group of order ≤ 32 gives rank 0.
fn abelian_triviality() -> Outcome {
    let start = Instant::now();
    let (mut groups, mut pairs) = (0, 0);
    for entry in catalogue(32) {
        let g = build_group(&entry.spec).map_err(|e| e.to_string())?;
        if !g.is_abelian() {
            continue;
        }
        groups += 1;
        let table = character_table(&g).map_err(|e| e.to_string())?;
        for lambda in all_sign_homomorphisms(&g) {
            let s = SignedGroup::with_table(table.clone(), &lambda).map_err(|e| e.to_string())?;
            let rank = k_group_s1_lambda_in(&s).map_err(|e| e.to_string())?.rank;
            ensure(rank == 0, || format!("{} λ={lambda}: rank {rank}", entry.label))?;
            pairs += 1;
        }
    }
    let elapsed = start.elapsed();
    within(elapsed, 10)?;
    Ok(format!("{groups} groups, {pairs} surjections, all rank 0 in {elapsed:.2?}"))
}

/// 2. `C2`: `K̃(S^{1⊕λ}) = 0` and `K̃(S^λ) = Z·(1 − σ)`.
fn z2_base_case() -> Outcome {
    let s = setting(GroupSpec::Cyclic(2), &[-1])?;
    let k = k_group_s1_lambda_in(&s).map_err(|e| e.to_string())?;
    ensure(k.rank == 0, || format!("S^(1+λ) rank {}", k.rank))?;
    let ideal = k_group_s_lambda_in(&s).map_err(|e| e.to_string())?;
    let one_minus_sigma = &VirtualCharacter::trivial(s.g_table()) - &s.lambda_character();
    ensure(ideal.rank == 1, || format!("S^λ rank {}", ideal.rank))?;
    ensure(ideal.basis[0].element == one_minus_sigma, || {
        format!("basis {:?}", ideal.basis[0].element.coefficients())
    })?;
    let oracle = check_ideal_lattice("C2", &s);
    ensure(oracle.status == Status::Pass, || oracle.details.clone())?;
    Ok(format!("S^(1+λ) rank 0; S^λ rank 1 with basis {one_minus_sigma} (lattice oracle: {})", oracle.details))
}

/// 3. Non-abelian witnesses, each confirmed by the orbit-count and lattice
/// oracles.
fn nonabelian_witnesses() -> Outcome {
    let mut cases: Vec<(String, GroupSpec, Vec<i8>, usize, Option<i64>)> = vec![
        ("S3/sign".into(), GroupSpec::Symmetric(3), vec![-1, 1], 1, Some(-1)),
        ("D4/reflection-sign".into(), GroupSpec::Dihedral(4), vec![1, -1], 1, Some(0)),
        ("Q8/H=C4".into(), GroupSpec::Quaternion, vec![1, -1], 1, None),
    ];
    for n in 3..=12 {
        cases.push((format!("D{n}/reflection-sign"), GroupSpec::Dihedral(n), vec![1, -1], (n - 1) / 2, None));
    }
    let mut slowest = Duration::ZERO;
    for (name, spec, signs, rank, degree_two_action) in cases {
        let start = Instant::now();
        let s = setting(spec, &signs)?;
        let k = k_group_s1_lambda_in(&s).map_err(|e| e.to_string())?;
        ensure(k.rank == rank, || format!("{name}: rank {} ≠ {rank}", k.rank))?;
        if let Some(a) = degree_two_action {
            let two: Vec<usize> = (0..s.g_table().len()).filter(|&i| s.g_table().degree(i) == 2).collect();
            ensure(two.len() == 1 && k.action[two[0]] == [[a]], || {
                format!("{name}: degree-2 action {:?}", two.iter().map(|&i| &k.action[i]).collect::<Vec<_>>())
            })?;
        }
        for oracle in [check_rank_formula(&name, &s), check_ideal_lattice(&name, &s)] {
            ensure(oracle.status == Status::Pass, || format!("{name}: {} {}", oracle.check, oracle.details))?;
        }
        let elapsed = start.elapsed();
        within(elapsed, 5).map_err(|e| format!("{name}: {e}"))?;
        slowest = slowest.max(elapsed);
    }
    Ok(format!("S3 (−1), D4 (0), D3–D12 ⌊(n−1)/2⌋, Q8 rank 1; slowest {slowest:.2?}"))
}

/// 4. Table invariants for every built-in group of order ≤ 48.
fn table_invariants() -> Outcome {
    let entries = catalogue(48);
    let results = run_suite(&entries, &options(true, false, false));
    let checks = summarize(&results)?;
    Ok(format!("{} groups, {checks} checks", entries.len()))
}

/// 5. Proof identities for every built-in group of order ≤ 64 and every λ.
fn proof_identities() -> Outcome {
    let entries = catalogue(64);
    let start = Instant::now();
    let results = run_suite(&entries, &options(false, true, false));
    let elapsed = start.elapsed();
    let checks = summarize(&results)?;
    within(elapsed, 60)?;
    Ok(format!("{} groups, {checks} checks in {elapsed:.2?}", entries.len()))
}

/// 6. Module axioms on 100 random virtual characters and zero products, for
/// every non-abelian built-in group of order ≤ 48.
fn module_structure() -> Outcome {
    let mut entries: Vec<CatalogueEntry> = Vec::new();
    for e in catalogue(48) {
        if !build_group(&e.spec).map_err(|e| e.to_string())?.is_abelian() {
            entries.push(e);
        }
    }
    let results: Vec<CheckResult> = run_suite(&entries, &options(false, false, true))
        .into_iter()
        .filter(|r| r.check == "module-structure")
        .collect();
    let checks = summarize(&results)?;
    ensure(checks > 0, || "no module checks ran".into())?;
    Ok(format!("{} non-abelian groups, {checks} presentations × 100 samples", entries.len()))
}

/// 7. Identical specs give byte-identical JSON, across processes and
/// across thread counts.
fn determinism() -> Outcome {
    let dir = std::path::PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let runs: [&[&str]; 3] = [
        &["kgroup", r#"{"family":"D","n":6,"lambda":{"convention":"reflection-sign"}}"#, "--sphere", "s1-lambda"],
        &["kgroup", r#"{"family":"S","n":4,"lambda":{"convention":"sign"}}"#, "--sphere", "s-lambda"],
        &["verify", r#"{"family":"product","factors":[{"family":"Q8"},{"family":"C","n":3}]}"#],
    ];
    for (i, args) in runs.iter().enumerate() {
        let mut outputs = Vec::new();
        for attempt in 0..2 {
            let path = dir.join(format!("determinism-{i}-{attempt}.json"));
            let status = Command::new(env!("CARGO_BIN_EXE_equivk"))
                .args(*args)
                .arg("--json")
                .arg(&path)
                .output()
                .map_err(|e| e.to_string())?
                .status;
            ensure(status.success(), || format!("{args:?} exited with {status}"))?;
            outputs.push(std::fs::read(&path).map_err(|e| e.to_string())?);
        }
        ensure(outputs[0] == outputs[1], || format!("{args:?}: reports differ"))?;
    }
    let entries = catalogue(16);
    let report = |threads| {
        let results = run_suite(&entries, &SuiteOptions { threads, ..SuiteOptions::default() });
        Report::new(ReportBody::Verify(VerifyReport::new("≤16", results))).to_json()
    };
    ensure(report(1) == report(4), || "suite report depends on thread count".into())?;
    Ok("3 CLI reports identical across runs; suite report identical for 1 and 4 threads".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 7] = [
        ("abelian triviality", abelian_triviality),
        ("Z/2 base case", z2_base_case),
        ("non-abelian witnesses", nonabelian_witnesses),
        ("character-table invariants", table_invariants),
        ("proof-identity suite", proof_identities),
        ("module structure", module_structure),
        ("determinism", determinism),
    ];
    let mut failures = 0;
    for (n, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS [{}] {name}: {detail}", n + 1),
            Err(detail) => {
                failures += 1;
                println!("FAIL [{}] {name}: {detail}", n + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
