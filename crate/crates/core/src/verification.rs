//! Independent checks of every character-level identity behind the
//! K-group computations.
//!
//! The oracles here deliberately avoid the fast paths of the engine:
//! induction is computed by counting conjugates over all of `G` rather than
//! by the Frobenius formula over a transversal, multiplicities come from the
//! exact cyclotomic inner product rather than the integer decomposition, the
//! twist is evaluated element by element, and lattices are compared through
//! their Hermite normal forms.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, Mutex};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::character::{character_table, inner_product, ClassFunction, OrbitData, SignedGroup, TableValues, VirtualCharacter};
use crate::cyclotomic::Cyclotomic;
use crate::error::Result;
use crate::group::{all_sign_homomorphisms, build_group_with_limit, CatalogueEntry, GroupTable, SignHomomorphism};
use crate::ktheory::{
    apply_matrix, has_central_coset_element, identity_matrix, k_group_s1_lambda_from_twist, k_group_s1_lambda_in,
    k_group_s_lambda_in, matrix_product, module_action, rank_splitting_report_in, KGroupPresentation,
};
use crate::lattice;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Not a failure; recorded for information (e.g. rank 0 without a
    /// commuting coset element).
    Info,
}

/// One line of a verification report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub check: String,
    pub group: String,
    pub lambda: Option<String>,
    pub status: Status,
    pub details: String,
}

impl CheckResult {
    fn new(check: &str, group: &str, lambda: Option<&str>, failures: Vec<String>, summary: String) -> CheckResult {
        let (status, details) = if failures.is_empty() {
            (Status::Pass, summary)
        } else {
            let shown: Vec<&str> = failures.iter().take(8).map(String::as_str).collect();
            let more = failures.len().saturating_sub(shown.len());
            let mut details = shown.join("; ");
            if more > 0 {
                details.push_str(&format!("; … {more} more"));
            }
            (Status::Fail, details)
        };
        CheckResult {
            check: check.to_string(),
            group: group.to_string(),
            lambda: lambda.map(str::to_string),
            status,
            details,
        }
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

/// Table invariants: class count, `Σ d² = |G|`, and exact row and column
/// orthogonality, evaluated on the bare numbers of the table.
pub fn check_table(group: &str, table: &TableValues) -> Vec<CheckResult> {
    let n = table.class_sizes.len();
    let mut out = Vec::new();

    let mut failures = Vec::new();
    if table.rows.len() != n {
        failures.push(format!("{} irreducibles for {n} classes", table.rows.len()));
    }
    let size_sum: usize = table.class_sizes.iter().sum();
    if size_sum != table.order {
        failures.push(format!("class sizes sum to {size_sum}, order {}", table.order));
    }
    if let Some(i) = table.rows.iter().position(|r| r.len() != n) {
        failures.push(format!("row {i} has the wrong length"));
    }
    out.push(CheckResult::new("class-count", group, None, failures.clone(), format!("{n} classes")));
    if !failures.is_empty() {
        return out;
    }

    let mut failures = Vec::new();
    let mut sum = 0i64;
    for (i, row) in table.rows.iter().enumerate() {
        match row[0].as_integer() {
            Some(d) if d > 0 => sum += d * d,
            _ => failures.push(format!("χ{i}(1) = {} is not a positive integer", row[0])),
        }
    }
    if failures.is_empty() && sum != table.order as i64 {
        failures.push(format!("Σ d² = {sum} ≠ {}", table.order));
    }
    out.push(CheckResult::new("degree-sum", group, None, failures, format!("Σ d² = {sum}")));

    let conj: Vec<Vec<Cyclotomic>> = table.rows.iter().map(|r| r.iter().map(Cyclotomic::conj).collect()).collect();
    let order = table.order as i64;

    let mut failures = Vec::new();
    for a in 0..n {
        for b in a..n {
            let mut acc = Cyclotomic::zero(table.rows[a][0].field());
            for j in 0..n {
                acc = &acc + &(&table.rows[a][j] * &conj[b][j]).scale(table.class_sizes[j] as i64);
            }
            let expected = if a == b { order } else { 0 };
            if acc.as_integer() != Some(expected) {
                failures.push(format!("rows ({a},{b}): |G|⟨χ{a},χ{b}⟩ = {acc}"));
            }
        }
    }
    out.push(CheckResult::new("row-orthogonality", group, None, failures, format!("{n}×{n} pairs exact")));

    let mut failures = Vec::new();
    for j in 0..n {
        for k in j..n {
            let mut acc = Cyclotomic::zero(table.rows[0][j].field());
            for i in 0..n {
                acc = &acc + &(&table.rows[i][j] * &conj[i][k]);
            }
            let expected = if j == k { order / table.class_sizes[j] as i64 } else { 0 };
            if acc.as_integer() != Some(expected) {
                failures.push(format!("columns ({j},{k}): Σ χ(g_{j}) conj χ(g_{k}) = {acc}"));
            }
        }
    }
    for j in 0..n {
        let inv = table.inverse_class[j];
        if let Some(i) = (0..n).find(|&i| table.rows[i][inv] != conj[i][j]) {
            failures.push(format!("χ{i} at inverse of class {j} is not the conjugate"));
        }
    }
    out.push(CheckResult::new("column-orthogonality", group, None, failures, format!("{n}×{n} pairs exact")));
    out
}

/// Brute-force character data for `H = ker λ ⊂ G`.
struct Oracle<'a> {
    s: &'a SignedGroup,
    /// For each class of `G`: `(H-class, #{x ∈ G : x⁻¹ g x ∈ that class})`.
    conjugate_counts: Vec<Vec<(usize, i64)>>,
    /// Class of `G` containing each class representative of `H`.
    fusion: Vec<usize>,
}

impl<'a> Oracle<'a> {
    fn new(s: &'a SignedGroup) -> Oracle<'a> {
        let g = s.group();
        let emb = s.embedding();
        let g_classes = s.g_table().classes();
        let h_classes = s.h_table().classes();
        let conjugate_counts = g_classes
            .representatives()
            .iter()
            .map(|&rep| {
                let mut counts = vec![0i64; h_classes.len()];
                for x in 0..g.order() {
                    if let Some(h) = emb.position(g.conjugate(rep, x)) {
                        counts[h_classes.class_of(h)] += 1;
                    }
                }
                counts.into_iter().enumerate().filter(|&(_, c)| c > 0).collect()
            })
            .collect();
        let fusion = h_classes
            .representatives()
            .iter()
            .map(|&h| g_classes.class_of(emb.include(h)))
            .collect();
        Oracle {
            s,
            conjugate_counts,
            fusion,
        }
    }

    fn field(&self) -> &Arc<crate::cyclotomic::CyclotomicField> {
        self.s.g_table().field()
    }

    /// `(ind f)(g) = |H|⁻¹ Σ_{x ∈ G} f°(x⁻¹ g x)`.
    fn induce(&self, f: &[Cyclotomic]) -> Vec<Cyclotomic> {
        let h_order = self.s.embedding().subgroup().order() as i64;
        self.conjugate_counts
            .iter()
            .map(|counts| {
                let mut acc = Cyclotomic::zero(self.field());
                for &(k, c) in counts {
                    acc = &acc + &f[k].scale(c);
                }
                acc.div_int(h_order)
            })
            .collect()
    }

    /// [`induce`](Self::induce) on concatenated numerators; `None` when a
    /// value is not an algebraic integer.
    fn induce_flat(&self, f: &[i64]) -> Option<Vec<i64>> {
        let d = self.field().degree();
        let h_order = self.s.embedding().subgroup().order() as i64;
        let mut out = vec![0i64; self.conjugate_counts.len() * d];
        for (acc, counts) in out.chunks_mut(d).zip(&self.conjugate_counts) {
            for &(k, c) in counts {
                for (a, &x) in acc.iter_mut().zip(&f[k * d..(k + 1) * d]) {
                    *a += c * x;
                }
            }
        }
        for a in &mut out {
            if *a % h_order != 0 {
                return None;
            }
            *a /= h_order;
        }
        Some(out)
    }

    fn restrict_flat(&self, f: &[i64]) -> Vec<i64> {
        let d = self.field().degree();
        self.fusion.iter().flat_map(|&j| f[j * d..(j + 1) * d].iter().copied()).collect()
    }

    fn restrict(&self, f: &[Cyclotomic]) -> Vec<Cyclotomic> {
        self.fusion.iter().map(|&j| f[j].clone()).collect()
    }

    /// `h ↦ f(b⁻¹ h b)`, element by element.
    fn twist(&self, f: &[Cyclotomic], b: usize) -> Vec<Cyclotomic> {
        let g = self.s.group();
        let emb = self.s.embedding();
        let h_classes = self.s.h_table().classes();
        h_classes
            .representatives()
            .iter()
            .map(|&h| {
                let y = emb.position(g.conjugate(emb.include(h), b)).expect("kernel is normal");
                f[h_classes.class_of(y)].clone()
            })
            .collect()
    }

    fn g_function(&self, values: Vec<Cyclotomic>) -> ClassFunction {
        let t = self.s.g_table();
        ClassFunction::new(t.group().clone(), t.classes().clone(), values).expect("class count")
    }

    fn h_function(&self, values: Vec<Cyclotomic>) -> ClassFunction {
        let t = self.s.h_table();
        ClassFunction::new(t.group().clone(), t.classes().clone(), values).expect("class count")
    }

    fn g_row(&self, i: usize) -> &'a [Cyclotomic] {
        self.s.g_table().row(i)
    }

    fn h_row(&self, i: usize) -> &'a [Cyclotomic] {
        self.s.h_table().row(i)
    }
}

/// Concatenated numerators of integral values.
fn flatten(values: &[Cyclotomic]) -> Vec<i64> {
    values
        .iter()
        .flat_map(|v| {
            assert_eq!(v.denominator(), 1, "character values are algebraic integers");
            v.coefficients().iter().copied()
        })
        .collect()
}

fn pointwise_flat(field: &crate::cyclotomic::CyclotomicField, a: &[i64], b: &[i64]) -> Vec<i64> {
    let d = field.degree();
    let mut out = vec![0i64; a.len()];
    for ((x, y), z) in a.chunks(d).zip(b.chunks(d)).zip(out.chunks_mut(d)) {
        field.mul_numerators(x, y, z);
    }
    out
}

fn pointwise_sum(a: &[Cyclotomic], b: &[Cyclotomic]) -> Vec<Cyclotomic> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn exact_multiplicity(f: &ClassFunction, g: &ClassFunction) -> Option<i64> {
    inner_product(f, g).ok()?.as_integer()
}

/// Per-λ label used in reports.
pub fn lambda_label(lambda: &SignHomomorphism) -> String {
    lambda.to_string()
}

struct Ctx<'a> {
    group: &'a str,
    lambda: String,
}

impl Ctx<'_> {
    fn result(&self, check: &str, failures: Vec<String>, summary: String) -> CheckResult {
        CheckResult::new(check, self.group, Some(&self.lambda), failures, summary)
    }
}

/// `⟨ind χ, φ⟩_G = ⟨χ, res φ⟩_H`, both sides by brute force and both equal
/// to the engine's coordinates.
pub fn check_frobenius_reciprocity(group: &str, s: &SignedGroup) -> CheckResult {
    let ctx = Ctx { group, lambda: lambda_label(s.lambda()) };
    let o = Oracle::new(s);
    let (g_table, h_table) = (s.g_table(), s.h_table());
    let mut failures = Vec::new();
    let restricted: Vec<ClassFunction> =
        (0..g_table.len()).map(|j| o.h_function(o.restrict(o.g_row(j)))).collect();
    let engine_res: Vec<Vec<i64>> = (0..g_table.len())
        .map(|j| {
            s.restrict(&VirtualCharacter::irreducible(g_table, j))
                .map(|v| v.coefficients().to_vec())
                .unwrap_or_default()
        })
        .collect();
    for i in 0..h_table.len() {
        let induced = o.g_function(o.induce(o.h_row(i)));
        let engine_ind = s.induce(&VirtualCharacter::irreducible(h_table, i)).map(|v| v.coefficients().to_vec());
        let chi = h_table.irreducible(i);
        for j in 0..g_table.len() {
            let lhs = exact_multiplicity(&induced, &g_table.irreducible(j));
            let rhs = exact_multiplicity(&chi, &restricted[j]);
            let e_ind = engine_ind.as_ref().ok().and_then(|c| c.get(j).copied());
            let e_res = engine_res[j].get(i).copied();
            if lhs.is_none() || lhs != rhs || lhs != e_ind || lhs != e_res {
                failures.push(format!("χ{i}, φ{j}: {lhs:?} vs {rhs:?} (engine {e_ind:?}, {e_res:?})"));
            }
        }
    }
    ctx.result(
        "frobenius-reciprocity",
        failures,
        format!("{}×{} pairs", h_table.len(), g_table.len()),
    )
}

/// `φ ⊗ ind χ = ind(res φ ⊗ χ)`, pointwise by brute force and in `R(G)`.
pub fn check_projection_formula(group: &str, s: &SignedGroup) -> CheckResult {
    let ctx = Ctx { group, lambda: lambda_label(s.lambda()) };
    let o = Oracle::new(s);
    let (g_table, h_table) = (s.g_table(), s.h_table());
    let field = o.field().clone();
    let mut failures = Vec::new();
    // Character values are algebraic integers, so the oracle works on
    // concatenated power-basis numerators throughout.
    let g_rows: Vec<Vec<i64>> = (0..g_table.len()).map(|j| flatten(o.g_row(j))).collect();
    let h_rows: Vec<Vec<i64>> = (0..h_table.len()).map(|i| flatten(o.h_row(i))).collect();
    let induced: Vec<Option<Vec<i64>>> = h_rows.iter().map(|f| o.induce_flat(f)).collect();
    let engine_induced: Vec<Result<VirtualCharacter>> = (0..h_table.len())
        .map(|i| s.induce(&VirtualCharacter::irreducible(h_table, i)))
        .collect();
    for j in 0..g_table.len() {
        let phi_res = o.restrict_flat(&g_rows[j]);
        let phi = VirtualCharacter::irreducible(g_table, j);
        let engine_res = s.restrict(&phi);
        for i in 0..h_table.len() {
            let Some(ind_chi) = &induced[i] else {
                failures.push(format!("χ{i}: induced values are not algebraic integers"));
                continue;
            };
            let lhs = pointwise_flat(&field, &g_rows[j], ind_chi);
            let rhs = o.induce_flat(&pointwise_flat(&field, &phi_res, &h_rows[i]));
            if rhs.as_ref() != Some(&lhs) {
                failures.push(format!("φ{j}, χ{i}: pointwise values differ"));
                continue;
            }
            // The right side uses linearity of induction over the cached
            // inductions of the irreducibles of H.
            let engine = (|| -> Result<bool> {
                let left = phi.tensor(engine_induced[i].as_ref().map_err(Clone::clone)?)?;
                let inner = engine_res
                    .as_ref()
                    .map_err(Clone::clone)?
                    .tensor(&VirtualCharacter::irreducible(h_table, i))?;
                let mut right = vec![0i64; g_table.len()];
                for (k, &c) in inner.coefficients().iter().enumerate() {
                    if c != 0 {
                        let ind = engine_induced[k].as_ref().map_err(Clone::clone)?;
                        for (r, &x) in right.iter_mut().zip(ind.coefficients()) {
                            *r += c * x;
                        }
                    }
                }
                Ok(left.coefficients() == right.as_slice()
                    && g_table.has_flat_values(left.coefficients(), &lhs))
            })();
            match engine {
                Ok(true) => {}
                Ok(false) => failures.push(format!("φ{j}, χ{i}: R(G) elements differ from the oracle")),
                Err(e) => failures.push(format!("φ{j}, χ{i}: {e}")),
            }
        }
    }
    ctx.result(
        "projection-formula",
        failures,
        format!("{}×{} pairs", g_table.len(), h_table.len()),
    )
}

/// `res ind χ = χ + ᵇχ`.
pub fn check_mackey_restriction(group: &str, s: &SignedGroup) -> CheckResult {
    let ctx = Ctx { group, lambda: lambda_label(s.lambda()) };
    let o = Oracle::new(s);
    let h_table = s.h_table();
    let b = s.b();
    let mut failures = Vec::new();
    for i in 0..h_table.len() {
        let chi = o.h_row(i);
        let lhs = o.restrict(&o.induce(&chi));
        let rhs = pointwise_sum(chi, &o.twist(chi, b));
        if lhs != rhs {
            failures.push(format!("χ{i}: brute-force values differ"));
            continue;
        }
        let engine = (|| -> Result<bool> {
            let x = VirtualCharacter::irreducible(h_table, i);
            let left = s.restrict(&s.induce(&x)?)?;
            let right = &x + &s.twist(&x)?;
            Ok(left == right && h_table.has_values(left.coefficients(), &lhs))
        })();
        match engine {
            Ok(true) => {}
            Ok(false) => failures.push(format!("χ{i}: engine disagrees")),
            Err(e) => failures.push(format!("χ{i}: {e}")),
        }
    }
    ctx.result("mackey-restriction", failures, format!("{} irreducibles of H", h_table.len()))
}

/// `⟨res φ, χ⟩ = ⟨res φ, ᵇχ⟩`.
pub fn check_orbit_multiplicities(group: &str, s: &SignedGroup) -> CheckResult {
    let ctx = Ctx { group, lambda: lambda_label(s.lambda()) };
    let o = Oracle::new(s);
    let (g_table, h_table) = (s.g_table(), s.h_table());
    let b = s.b();
    let chis: Vec<ClassFunction> = (0..h_table.len()).map(|i| h_table.irreducible(i)).collect();
    let twisted: Vec<ClassFunction> =
        (0..h_table.len()).map(|i| o.h_function(o.twist(o.h_row(i), b))).collect();
    let mut failures = Vec::new();
    for j in 0..g_table.len() {
        let res = o.h_function(o.restrict(o.g_row(j)));
        for i in 0..h_table.len() {
            let a = exact_multiplicity(&res, &chis[i]);
            let c = exact_multiplicity(&res, &twisted[i]);
            if a.is_none() || a != c {
                failures.push(format!("φ{j}, χ{i}: {a:?} vs {c:?}"));
            }
        }
    }
    ctx.result(
        "orbit-multiplicities",
        failures,
        format!("{}×{} pairs", g_table.len(), h_table.len()),
    )
}

fn same_presentation(a: &KGroupPresentation, b: &KGroupPresentation) -> bool {
    a.rank == b.rank
        && a.action == b.action
        && a.basis.iter().zip(&b.basis).all(|(x, y)| {
            x.representative == y.representative && x.partner == y.partner && x.element == y.element
        })
}

/// Every `b ∈ G∖H` gives the same twist, orbits and presentation.
pub fn check_b_independence(group: &str, s: &SignedGroup) -> CheckResult {
    let ctx = Ctx { group, lambda: lambda_label(s.lambda()) };
    let o = Oracle::new(s);
    let h_table = s.h_table();
    let mut failures = Vec::new();
    let canonical = match k_group_s1_lambda_in(s) {
        Ok(k) => k,
        Err(e) => return ctx.result("b-independence", vec![e.to_string()], String::new()),
    };
    let orbits = s.orbits();
    for &b in s.non_kernel() {
        let brute: Option<Vec<usize>> = (0..h_table.len())
            .map(|i| h_table.find_row(&o.twist(o.h_row(i), b)))
            .collect();
        let engine = s.twist_permutation_by(b).ok();
        if brute.is_none() || brute != engine {
            failures.push(format!("b = {}: twist {brute:?}, engine {engine:?}", s.group().label(b)));
            continue;
        }
        let perm = brute.expect("checked above");
        if OrbitData::from_permutation(&perm) != orbits {
            failures.push(format!("b = {}: orbits differ", s.group().label(b)));
            continue;
        }
        match k_group_s1_lambda_from_twist(s, &perm) {
            Ok(k) if same_presentation(&k, &canonical) => {}
            Ok(_) => failures.push(format!("b = {}: presentation differs", s.group().label(b))),
            Err(e) => failures.push(format!("b = {}: {e}", s.group().label(b))),
        }
    }
    ctx.result("b-independence", failures, format!("{} choices of b", s.non_kernel().len()))
}

/// A coset element commuting with `H` forces rank 0. The converse is not
/// claimed: rank 0 without such an element is reported as `Info`.
pub fn check_corollary(group: &str, s: &SignedGroup) -> CheckResult {
    let ctx = Ctx { group, lambda: lambda_label(s.lambda()) };
    let predicate = has_central_coset_element(s);
    let rank = match k_group_s1_lambda_in(s) {
        Ok(k) => k.rank,
        Err(e) => return ctx.result("corollary", vec![e.to_string()], String::new()),
    };
    let mut r = ctx.result(
        "corollary",
        if predicate && rank > 0 {
            vec![format!("commuting b exists but rank = {rank}")]
        } else {
            Vec::new()
        },
        format!("commuting b: {predicate}, rank {rank}"),
    );
    if !predicate && rank == 0 {
        r.status = crate::verification::Status::Info;
    }
    r
}

/// The emitted ideal basis spans the same lattice as `{(1 - λ_ℂ)φ}`,
/// with the products decomposed by exact inner products.
pub fn check_ideal_lattice(group: &str, s: &SignedGroup) -> CheckResult {
    let ctx = Ctx { group, lambda: lambda_label(s.lambda()) };
    let ideal = match k_group_s_lambda_in(s) {
        Ok(i) => i,
        Err(e) => return ctx.result("ideal-lattice", vec![e.to_string()], String::new()),
    };
    let table = s.g_table();
    let field = table.field();
    let lambda_values: Vec<Cyclotomic> = table
        .classes()
        .representatives()
        .iter()
        .map(|&x| Cyclotomic::from_int(field, s.lambda().value(x) as i64))
        .collect();
    let irr: Vec<ClassFunction> = (0..table.len()).map(|i| table.irreducible(i)).collect();
    let mut failures = Vec::new();
    let mut generators = Vec::new();
    for (j, phi) in irr.iter().enumerate() {
        let values: Vec<Cyclotomic> = phi
            .values()
            .iter()
            .zip(&lambda_values)
            .map(|(v, l)| v - &(v * l))
            .collect();
        let f = ClassFunction::new(table.group().clone(), table.classes().clone(), values).expect("class count");
        let coeffs: Option<Vec<i64>> = irr.iter().map(|chi| exact_multiplicity(&f, chi)).collect();
        match coeffs {
            Some(c) => generators.push(c),
            None => failures.push(format!("(1-λ)φ{j} has a non-integral decomposition")),
        }
    }
    let basis: Vec<Vec<i64>> = ideal.basis.iter().map(|b| b.element.coefficients().to_vec()).collect();
    let rank = lattice::lattice_rank(&generators);
    if failures.is_empty() {
        if rank != ideal.rank {
            failures.push(format!("lattice rank {rank}, presentation rank {}", ideal.rank));
        }
        if !lattice::integrally_independent(&basis) {
            failures.push("basis is not independent".into());
        }
        if !lattice::same_span(&generators, &basis) {
            failures.push("spans differ".into());
        }
    }
    ctx.result("ideal-lattice", failures, format!("rank {rank}"))
}

/// `rank = (|Irr H| - #fixed)/2`, matching the orbit counts, with an
/// integrally independent basis.
pub fn check_rank_formula(group: &str, s: &SignedGroup) -> CheckResult {
    let ctx = Ctx { group, lambda: lambda_label(s.lambda()) };
    let o = Oracle::new(s);
    let h_table = s.h_table();
    let fixed = (0..h_table.len())
        .filter(|&i| {
            let chi = o.h_row(i);
            o.twist(chi, s.b()) == chi
        })
        .count();
    let k = match k_group_s1_lambda_in(s) {
        Ok(k) => k,
        Err(e) => return ctx.result("rank-formula", vec![e.to_string()], String::new()),
    };
    let report = rank_splitting_report_in(s);
    let mut failures = Vec::new();
    let expected = (h_table.len() - fixed) / 2;
    if k.rank != expected || report.rank != expected {
        failures.push(format!("rank {} / report {} vs formula {expected}", k.rank, report.rank));
    }
    if report.orbits_isotropy_g != fixed {
        failures.push(format!("{} fixed orbits reported, {fixed} counted", report.orbits_isotropy_g));
    }
    let rows: Vec<Vec<i64>> = k.basis.iter().map(|b| b.element.coefficients().to_vec()).collect();
    if !lattice::integrally_independent(&rows) {
        failures.push("basis is not integrally independent in R(H)".into());
    }
    ctx.result("rank-formula", failures, format!("rank {expected}, {fixed} fixed"))
}

fn random_virtual(rng: &mut ChaCha8Rng, table: &Arc<crate::character::CharacterTable>) -> VirtualCharacter {
    let coeffs = (0..table.len()).map(|_| rng.gen_range(-2..=2)).collect();
    VirtualCharacter::new(table, coeffs).expect("length matches")
}

/// Module axioms of the action matrices on random virtual characters, and
/// the vanishing product.
pub fn check_module_structure(group: &str, s: &SignedGroup, samples: usize, seed: u64) -> CheckResult {
    let ctx = Ctx { group, lambda: lambda_label(s.lambda()) };
    let k = match k_group_s1_lambda_in(s) {
        Ok(k) => k,
        Err(e) => return ctx.result("module-structure", vec![e.to_string()], String::new()),
    };
    let table = s.g_table();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ stable_hash(group) ^ stable_hash(&ctx.lambda).rotate_left(17));
    let mut failures = Vec::new();
    let id = identity_matrix(k.rank);
    let run = |failures: &mut Vec<String>, rng: &mut ChaCha8Rng| -> Result<()> {
        if k.action_of(&VirtualCharacter::trivial(table))? != id {
            failures.push("trivial does not act as the identity".into());
        }
        if k.action_of(&s.lambda_character())? != id {
            failures.push("λ_ℂ does not act as the identity".into());
        }
        let chars: Vec<VirtualCharacter> = (0..samples).map(|_| random_virtual(rng, table)).collect();
        let mats: Vec<Vec<Vec<i64>>> = chars.iter().map(|c| k.action_of(c)).collect::<Result<_>>()?;
        for t in 0..chars.len() {
            let u = (t + 1) % chars.len();
            let (a, b) = (&chars[t], &chars[u]);
            let sum: Vec<Vec<i64>> = mats[t]
                .iter()
                .zip(&mats[u])
                .map(|(r, q)| r.iter().zip(q).map(|(x, y)| x + y).collect())
                .collect();
            if k.action_of(&(a + b))? != sum {
                failures.push(format!("sample {t}: not additive"));
            }
            if k.action_of(&a.tensor(b)?)? != matrix_product(&mats[t], &mats[u]) {
                failures.push(format!("sample {t}: not multiplicative"));
            }
            let x: Vec<i64> = (0..k.rank).map(|_| rng.gen_range(-3..=3)).collect();
            let direct = module_action(s, &k, a, &x)?;
            if direct != apply_matrix(&mats[t], &x) {
                failures.push(format!("sample {t}: matrix disagrees with res(φ)⊗x"));
            }
            let y: Vec<i64> = (0..k.rank).map(|_| rng.gen_range(-3..=3)).collect();
            if k.ring_product(&x, &y)?.iter().any(|&c| c != 0) {
                failures.push(format!("sample {t}: non-zero product"));
            }
        }
        Ok(())
    };
    if let Err(e) = run(&mut failures, &mut rng) {
        failures.push(e.to_string());
    }
    ctx.result("module-structure", failures, format!("{samples} samples, rank {}", k.rank))
}

// FNV-1a; a fixed function so seeds do not depend on the platform hasher.
fn stable_hash(s: &str) -> u64 {
    s.bytes()
        .fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

/// Which groups of checks to run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteOptions {
    pub tables: bool,
    pub identities: bool,
    pub structure: bool,
    /// Random virtual characters per presentation for the module check;
    /// zero skips it.
    pub module_samples: usize,
    pub seed: u64,
    pub threads: usize,
    pub order_limit: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            tables: true,
            identities: true,
            structure: true,
            module_samples: 100,
            seed: 0x5eed,
            threads: std::thread::available_parallelism().map_or(1, |n| n.get()),
            order_limit: crate::group::DEFAULT_ORDER_LIMIT,
        }
    }
}

/// All checks for one group and the given sign homomorphisms (every one
/// when `lambdas` is `None`).
pub fn verify_group(
    label: &str,
    g: &Arc<GroupTable>,
    lambdas: Option<&[SignHomomorphism]>,
    options: &SuiteOptions,
) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let table = match character_table(g) {
        Ok(t) => t,
        Err(e) => {
            out.push(CheckResult::new("character-table", label, None, vec![e.to_string()], String::new()));
            return out;
        }
    };
    if options.tables {
        out.extend(check_table(label, &table.values()));
    }
    let all;
    let lambdas = match lambdas {
        Some(l) => l,
        None => {
            all = all_sign_homomorphisms(g);
            &all
        }
    };
    for lambda in lambdas {
        let s = match SignedGroup::with_table(table.clone(), lambda) {
            Ok(s) => s,
            Err(e) => {
                out.push(CheckResult::new(
                    "setup",
                    label,
                    Some(&lambda_label(lambda)),
                    vec![e.to_string()],
                    String::new(),
                ));
                continue;
            }
        };
        if options.identities {
            out.push(check_frobenius_reciprocity(label, &s));
            out.push(check_projection_formula(label, &s));
            out.push(check_mackey_restriction(label, &s));
            out.push(check_orbit_multiplicities(label, &s));
            out.push(check_b_independence(label, &s));
        }
        if options.structure {
            out.push(check_corollary(label, &s));
            out.push(check_ideal_lattice(label, &s));
            out.push(check_rank_formula(label, &s));
            if options.module_samples > 0 {
                out.push(check_module_structure(label, &s, options.module_samples, options.seed));
            }
        }
    }
    out
}

/// Runs `verify_group` over catalogue entries, concurrently when
/// `options.threads > 1`. Output order is the entry order, then λ in
/// enumeration order, then the fixed check order, whatever the scheduling.
pub fn run_suite(entries: &[CatalogueEntry], options: &SuiteOptions) -> Vec<CheckResult> {
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<Vec<CheckResult>>>> = Mutex::new(vec![None; entries.len()]);
    let work = || loop {
        let i = next.fetch_add(1, Ordering::Relaxed);
        let Some(entry) = entries.get(i) else { break };
        let results = match build_group_with_limit(&entry.spec, options.order_limit) {
            Ok(g) => verify_group(&entry.label, &g, None, options),
            Err(e) => vec![CheckResult::new("build", &entry.label, None, vec![e.to_string()], String::new())],
        };
        slots.lock().expect("no poisoned workers")[i] = Some(results);
    };
    let threads = options.threads.clamp(1, entries.len().max(1));
    std::thread::scope(|scope| {
        for _ in 1..threads {
            scope.spawn(work);
        }
        work();
    });
    slots
        .into_inner()
        .expect("no poisoned workers")
        .into_iter()
        .flat_map(|r| r.expect("every entry processed"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_group, GroupSpec};

    fn setting(spec: GroupSpec, signs: &[i8]) -> SignedGroup {
        let g = build_group(&spec).unwrap();
        SignedGroup::new(&g, &SignHomomorphism::from_generator_signs(&g, signs).unwrap()).unwrap()
    }

    #[test]
    fn tables_pass_and_corruption_is_caught() {
        let g = build_group(&GroupSpec::Symmetric(4)).unwrap();
        let values = character_table(&g).unwrap().values();
        assert!(check_table("S4", &values).iter().all(|r| r.status == Status::Pass));
        let mut bad = values.clone();
        bad.rows[2][1] = &bad.rows[2][1] + &Cyclotomic::one(bad.rows[2][1].field());
        let report = check_table("S4", &bad);
        let row = report.iter().find(|r| r.check == "row-orthogonality").unwrap();
        assert_eq!(row.status, Status::Fail);
        assert!(row.details.contains("rows (2,2)"));
    }

    #[test]
    fn identities_hold_for_s3() {
        let s = setting(GroupSpec::Symmetric(3), &[-1, 1]);
        for r in [
            check_frobenius_reciprocity("S3", &s),
            check_projection_formula("S3", &s),
            check_mackey_restriction("S3", &s),
            check_orbit_multiplicities("S3", &s),
            check_b_independence("S3", &s),
            check_corollary("S3", &s),
            check_ideal_lattice("S3", &s),
            check_rank_formula("S3", &s),
            check_module_structure("S3", &s, 20, 1),
        ] {
            assert_eq!(r.status, Status::Pass, "{r:?}");
        }
    }

    #[test]
    fn corollary_info_and_pass() {
        let c4 = setting(GroupSpec::Cyclic(4), &[-1]);
        assert_eq!(check_corollary("C4", &c4).status, Status::Pass);
        let s3 = setting(GroupSpec::Symmetric(3), &[-1, 1]);
        assert!(check_corollary("S3", &s3).details.contains("commuting b: false, rank 1"));
    }

    #[test]
    fn suite_is_deterministic_across_thread_counts() {
        let entries = crate::group::catalogue(8);
        let one = run_suite(&entries, &SuiteOptions { threads: 1, module_samples: 5, ..Default::default() });
        let many = run_suite(&entries, &SuiteOptions { threads: 4, module_samples: 5, ..Default::default() });
        assert_eq!(one, many);
        assert!(one.iter().all(CheckResult::passed), "{:?}", one.iter().find(|r| !r.passed()));
    }
}
