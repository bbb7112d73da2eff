//! Presentations of `K̃_G(S^λ)` and `K̃_G(S^{1⊕λ})` as `R(G)`-modules.
//!
//! `K̃_G(S^λ)` is the ideal of `R(G)` generated by `1 - λ_ℂ`. `K̃_G(S^{1⊕λ})`
//! is free abelian on the classes `ind_H^G(χ ⊗ (ζ - 1))`, one for each pair
//! `{χ, ᵇχ}` of distinct twist-conjugate irreducibles of `H`; it embeds in
//! `R(H)` by sending that generator to `χ - ᵇχ`, where `R(G)` acts through
//! restriction. All products vanish because `(ζ - 1)^2 = 0` in `K̃(S^2)`.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::character::{CharacterTable, Isotropy, SignedGroup, VirtualCharacter};
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::group::{GroupTable, SignHomomorphism};
use crate::lattice;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SphereModel {
    #[serde(rename = "s-lambda")]
    SLambda,
    #[serde(rename = "s1-lambda")]
    S1PlusLambda,
}

impl std::fmt::Display for SphereModel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SphereModel::SLambda => "S^λ",
            SphereModel::S1PlusLambda => "S^(1+λ)",
        })
    }
}

/// How two elements of the reduced K-group multiply.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProductRule {
    Zero,
}

/// One free generator: the pair `{χ, ᵇχ}` and its image `χ - ᵇχ` in `R(H)`.
#[derive(Clone, Debug)]
pub struct BasisElement {
    /// Index in `Irr(H)` of `χ`, the orbit representative.
    pub representative: usize,
    /// Index in `Irr(H)` of `ᵇχ`.
    pub partner: usize,
    pub element: VirtualCharacter,
    pub label: String,
}

/// `K̃_G(S^{1⊕λ})` with basis, action matrices and product rule.
#[derive(Clone, Debug)]
pub struct KGroupPresentation {
    pub sphere: SphereModel,
    pub rank: usize,
    pub basis: Vec<BasisElement>,
    /// `action[i]` is the matrix of the `i`-th irreducible of `G`, acting on
    /// coordinate columns: `image = action[i] · x`.
    pub action: Vec<Vec<Vec<i64>>>,
    pub product_rule: ProductRule,
    g_table: Arc<CharacterTable>,
    h_table: Arc<CharacterTable>,
}

/// Square integer matrix–vector product.
pub fn apply_matrix(m: &[Vec<i64>], x: &[i64]) -> Vec<i64> {
    m.iter()
        .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
        .collect()
}

pub fn matrix_product(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..n)
                .map(|j| row.iter().zip(b).map(|(x, brow)| x * brow[j]).sum())
                .collect()
        })
        .collect()
}

pub fn identity_matrix(n: usize) -> Vec<Vec<i64>> {
    (0..n)
        .map(|i| (0..n).map(|j| (i == j) as i64).collect())
        .collect()
}

// Coordinates of y in the basis {χ_s - partner_s}: read off the coefficient
// of each representative, then confirm by reconstruction.
fn coordinates_in(pairs: &[(usize, usize)], y: &[i64]) -> Result<Vec<i64>> {
    let coords: Vec<i64> = pairs.iter().map(|&(rep, _)| y[rep]).collect();
    let mut recon = vec![0i64; y.len()];
    for (&(rep, partner), &c) in pairs.iter().zip(&coords) {
        recon[rep] += c;
        recon[partner] -= c;
    }
    if recon != y {
        return Err(Error::Internal("element lies outside the span of the basis".into()));
    }
    Ok(coords)
}

impl KGroupPresentation {
    pub fn g_table(&self) -> &Arc<CharacterTable> {
        &self.g_table
    }

    pub fn h_table(&self) -> &Arc<CharacterTable> {
        &self.h_table
    }

    fn pairs(&self) -> Vec<(usize, usize)> {
        self.basis.iter().map(|b| (b.representative, b.partner)).collect()
    }

    /// Coordinates of an element of `R(H)` lying in the image of `Ψ`.
    pub fn coordinates(&self, y: &VirtualCharacter) -> Result<Vec<i64>> {
        if !Arc::ptr_eq(y.table(), &self.h_table) {
            return Err(Error::MismatchedGroups);
        }
        coordinates_in(&self.pairs(), y.coefficients())
    }

    /// The element of `R(H)` with the given coordinates.
    pub fn element(&self, coords: &[i64]) -> Result<VirtualCharacter> {
        if coords.len() != self.rank {
            return Err(Error::MismatchedPresentations);
        }
        let mut acc = VirtualCharacter::zero(&self.h_table);
        for (b, &c) in self.basis.iter().zip(coords) {
            acc = &acc + &b.element.scale(c);
        }
        Ok(acc)
    }

    /// Matrix of a virtual character of `G`, by linearity from `action`.
    pub fn action_of(&self, phi: &VirtualCharacter) -> Result<Vec<Vec<i64>>> {
        if !Arc::ptr_eq(phi.table(), &self.g_table) {
            return Err(Error::MismatchedGroups);
        }
        let mut m = vec![vec![0i64; self.rank]; self.rank];
        for (&c, a) in phi.coefficients().iter().zip(&self.action) {
            if c == 0 {
                continue;
            }
            for (row, arow) in m.iter_mut().zip(a) {
                for (x, y) in row.iter_mut().zip(arow) {
                    *x += c * y;
                }
            }
        }
        Ok(m)
    }

    /// `αβ`, which is always zero.
    pub fn ring_product(&self, alpha: &[i64], beta: &[i64]) -> Result<Vec<i64>> {
        if alpha.len() != self.rank || beta.len() != self.rank {
            return Err(Error::MismatchedPresentations);
        }
        match self.product_rule {
            ProductRule::Zero => Ok(vec![0; self.rank]),
        }
    }
}

/// `K̃_G(S^{1⊕λ})`.
pub fn k_group_s1_lambda(g: &Arc<GroupTable>, lambda: &SignHomomorphism) -> Result<KGroupPresentation> {
    k_group_s1_lambda_in(&SignedGroup::new(g, lambda)?)
}

pub fn k_group_s1_lambda_in(setting: &SignedGroup) -> Result<KGroupPresentation> {
    k_group_s1_lambda_from_twist(setting, setting.twist_permutation())
}

/// The same presentation computed with `b` in place of the canonical choice.
pub fn k_group_s1_lambda_with_b(setting: &SignedGroup, b: usize) -> Result<KGroupPresentation> {
    if setting.lambda().in_kernel(b) {
        return Err(Error::Internal(format!("element {b} lies in the kernel")));
    }
    k_group_s1_lambda_from_twist(setting, &setting.twist_permutation_by(b)?)
}

/// The presentation determined by a twist permutation of `Irr(H)`, as
/// returned by [`SignedGroup::twist_permutation_by`].
pub fn k_group_s1_lambda_from_twist(setting: &SignedGroup, twist: &[usize]) -> Result<KGroupPresentation> {
    if twist.len() != setting.h_table().len() {
        return Err(Error::MismatchedGroups);
    }
    let h_table = setting.h_table().clone();
    let g_table = setting.g_table().clone();
    let mut basis = Vec::new();
    for (i, &j) in twist.iter().enumerate() {
        if i < j {
            let element = &VirtualCharacter::irreducible(&h_table, i) - &VirtualCharacter::irreducible(&h_table, j);
            basis.push(BasisElement {
                representative: i,
                partner: j,
                element,
                label: format!("ind(χ{i}⊗(ζ−1))"),
            });
        } else if twist[j] != i {
            return Err(Error::Internal("twist is not an involution".into()));
        }
    }
    let pairs: Vec<(usize, usize)> = basis.iter().map(|b| (b.representative, b.partner)).collect();
    let action = (0..g_table.len())
        .map(|i| {
            let res = setting.restrict(&VirtualCharacter::irreducible(&g_table, i))?;
            action_matrix(&res, &basis, &pairs)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(KGroupPresentation {
        sphere: SphereModel::S1PlusLambda,
        rank: basis.len(),
        basis,
        action,
        product_rule: ProductRule::Zero,
        g_table,
        h_table,
    })
}

fn action_matrix(res: &VirtualCharacter, basis: &[BasisElement], pairs: &[(usize, usize)]) -> Result<Vec<Vec<i64>>> {
    let n = basis.len();
    let mut m = vec![vec![0i64; n]; n];
    for (t, b) in basis.iter().enumerate() {
        let image = res.tensor(&b.element)?;
        let coords = coordinates_in(pairs, image.coefficients())?;
        for (s, c) in coords.into_iter().enumerate() {
            m[s][t] = c;
        }
    }
    Ok(m)
}

/// `φ · x = res_H(φ) ⊗ x`, computed in `R(H)` and re-expressed in the basis.
pub fn module_action(
    setting: &SignedGroup,
    presentation: &KGroupPresentation,
    phi: &VirtualCharacter,
    x: &[i64],
) -> Result<Vec<i64>> {
    if !Arc::ptr_eq(presentation.h_table(), setting.h_table()) {
        return Err(Error::MismatchedPresentations);
    }
    let y = presentation.element(x)?;
    let image = setting.restrict(phi)?.tensor(&y)?;
    presentation.coordinates(&image)
}

/// A generator `φ - λ_ℂ φ` of the ideal `(1 - λ_ℂ) ⊂ R(G)`.
#[derive(Clone, Debug)]
pub struct IdealBasisElement {
    pub representative: usize,
    pub partner: usize,
    pub element: VirtualCharacter,
}

/// `K̃_G(S^λ)` as the ideal generated by `1 - λ_ℂ`.
#[derive(Clone, Debug)]
pub struct IdealPresentation {
    pub sphere: SphereModel,
    pub rank: usize,
    pub basis: Vec<IdealBasisElement>,
    /// Multiplication by each irreducible of `G`, on coordinate columns.
    pub action: Vec<Vec<Vec<i64>>>,
    g_table: Arc<CharacterTable>,
}

impl IdealPresentation {
    pub fn g_table(&self) -> &Arc<CharacterTable> {
        &self.g_table
    }

    pub fn coordinates(&self, y: &VirtualCharacter) -> Result<Vec<i64>> {
        if !Arc::ptr_eq(y.table(), &self.g_table) {
            return Err(Error::MismatchedGroups);
        }
        let pairs: Vec<(usize, usize)> = self.basis.iter().map(|b| (b.representative, b.partner)).collect();
        coordinates_in(&pairs, y.coefficients())
    }
}

/// The permutation `φ ↦ λ_ℂ ⊗ φ` of `Irr(G)`.
pub fn lambda_multiplication(setting: &SignedGroup) -> Result<Vec<usize>> {
    let table = setting.g_table();
    let lambda = setting.lambda();
    let field = table.field();
    let signs: Vec<Cyclotomic> = table
        .classes()
        .representatives()
        .iter()
        .map(|&x| Cyclotomic::from_int(field, lambda.value(x) as i64))
        .collect();
    (0..table.len())
        .map(|i| {
            let values: Vec<Cyclotomic> = table.row(i).iter().zip(&signs).map(|(a, s)| a * s).collect();
            table
                .find_row(&values)
                .ok_or_else(|| Error::Internal("λ ⊗ χ is not irreducible".into()))
        })
        .collect()
}

pub fn k_group_s_lambda(g: &Arc<GroupTable>, lambda: &SignHomomorphism) -> Result<IdealPresentation> {
    k_group_s_lambda_in(&SignedGroup::new(g, lambda)?)
}

pub fn k_group_s_lambda_in(setting: &SignedGroup) -> Result<IdealPresentation> {
    let g_table = setting.g_table().clone();
    let perm = lambda_multiplication(setting)?;
    let mut basis = Vec::new();
    for (i, &j) in perm.iter().enumerate() {
        if i < j {
            basis.push(IdealBasisElement {
                representative: i,
                partner: j,
                element: &VirtualCharacter::irreducible(&g_table, i) - &VirtualCharacter::irreducible(&g_table, j),
            });
        }
    }
    let pairs: Vec<(usize, usize)> = basis.iter().map(|b| (b.representative, b.partner)).collect();
    let n = basis.len();
    let action = (0..g_table.len())
        .map(|i| {
            let phi = VirtualCharacter::irreducible(&g_table, i);
            let mut m = vec![vec![0i64; n]; n];
            for (t, b) in basis.iter().enumerate() {
                let image = phi.tensor(&b.element)?;
                for (s, c) in coordinates_in(&pairs, image.coefficients())?.into_iter().enumerate() {
                    m[s][t] = c;
                }
            }
            Ok(m)
        })
        .collect::<Result<Vec<_>>>()?;

    let rows: Vec<Vec<i64>> = basis.iter().map(|b| b.element.coefficients().to_vec()).collect();
    if !lattice::integrally_independent(&rows) {
        return Err(Error::Internal("ideal basis is not independent".into()));
    }
    Ok(IdealPresentation {
        sphere: SphereModel::SLambda,
        rank: n,
        basis,
        action,
        g_table,
    })
}

/// Orbit counts behind the splitting of `K̃_G(S^{1⊕λ})` into copies of
/// `K̃(S^2) ≅ Z` (isotropy `H`) and of `K̃_{Z/2}(S^{1⊕λ}) = 0` (isotropy `G`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplittingReport {
    pub orbits_isotropy_h: usize,
    pub orbits_isotropy_g: usize,
    pub rank: usize,
}

pub fn rank_splitting_report(g: &Arc<GroupTable>, lambda: &SignHomomorphism) -> Result<SplittingReport> {
    Ok(rank_splitting_report_in(&SignedGroup::new(g, lambda)?))
}

pub fn rank_splitting_report_in(setting: &SignedGroup) -> SplittingReport {
    let orbits = setting.orbits();
    let h = orbits.count(Isotropy::Kernel);
    SplittingReport {
        orbits_isotropy_h: h,
        orbits_isotropy_g: orbits.count(Isotropy::Whole),
        rank: h,
    }
}

/// Whether some `b ∈ G∖H` commutes with all of `H` (checked exhaustively).
pub fn has_central_coset_element(setting: &SignedGroup) -> bool {
    let g = setting.group();
    let h = setting.embedding().inclusion();
    setting
        .non_kernel()
        .iter()
        .any(|&b| h.iter().all(|&x| g.commutes(b, x)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_group, GroupSpec};

    fn setting(spec: GroupSpec, signs: &[i8]) -> SignedGroup {
        let g = build_group(&spec).unwrap();
        let lambda = SignHomomorphism::from_generator_signs(&g, signs).unwrap();
        SignedGroup::new(&g, &lambda).unwrap()
    }

    #[test]
    fn s3_sign() {
        let s = setting(GroupSpec::Symmetric(3), &[-1, 1]);
        let k = k_group_s1_lambda_in(&s).unwrap();
        assert_eq!(k.rank, 1);
        assert_eq!(k.basis[0].element.coefficients(), &[0, 1, -1]);
        assert_eq!(k.action[0], identity_matrix(1));
        assert_eq!(k.action[1], identity_matrix(1)); // λ_ℂ
        assert_eq!(k.action[2], vec![vec![-1]]);
        assert_eq!(k.ring_product(&[1], &[1]).unwrap(), vec![0]);
        assert_eq!(module_action(&s, &k, &VirtualCharacter::irreducible(s.g_table(), 2), &[3]).unwrap(), vec![-3]);

        let ideal = k_group_s_lambda_in(&s).unwrap();
        assert_eq!(ideal.rank, 1);
        assert_eq!(ideal.basis[0].element.coefficients(), &[1, -1, 0]);
    }

    #[test]
    fn d4_reflection_sign() {
        let s = setting(GroupSpec::Dihedral(4), &[1, -1]);
        let k = k_group_s1_lambda_in(&s).unwrap();
        assert_eq!(k.rank, 1);
        let two_dim = s.g_table().degrees().iter().position(|&d| d == 2).unwrap();
        assert_eq!(k.action[two_dim], vec![vec![0]]);
    }

    #[test]
    fn cyclic_cases() {
        let s = setting(GroupSpec::Cyclic(2), &[-1]);
        assert_eq!(k_group_s1_lambda_in(&s).unwrap().rank, 0);
        let ideal = k_group_s_lambda_in(&s).unwrap();
        assert_eq!(ideal.rank, 1);
        assert_eq!(ideal.basis[0].element.coefficients(), &[1, -1]);

        let s = setting(GroupSpec::Cyclic(4), &[-1]);
        let k = k_group_s1_lambda_in(&s).unwrap();
        assert_eq!(k.rank, 0);
        assert!(k.basis.is_empty() && k.action.iter().all(Vec::is_empty));
        assert_eq!(k.ring_product(&[], &[]).unwrap(), Vec::<i64>::new());
        assert_eq!(k_group_s_lambda_in(&s).unwrap().rank, 2);
    }

    #[test]
    fn d5_splitting() {
        let g = build_group(&GroupSpec::Dihedral(5)).unwrap();
        let lambda = SignHomomorphism::from_generator_signs(&g, &[1, -1]).unwrap();
        assert_eq!(
            rank_splitting_report(&g, &lambda).unwrap(),
            SplittingReport {
                orbits_isotropy_h: 2,
                orbits_isotropy_g: 1,
                rank: 2
            }
        );
    }

    #[test]
    fn mismatched_elements_rejected() {
        let s = setting(GroupSpec::Symmetric(3), &[-1, 1]);
        let k = k_group_s1_lambda_in(&s).unwrap();
        assert_eq!(k.ring_product(&[1, 0], &[1]).unwrap_err(), Error::MismatchedPresentations);
        assert!(k.element(&[]).is_err());
    }
}
