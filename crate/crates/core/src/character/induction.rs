//! Restriction, induction and the conjugation twist for a subgroup, and the
//! index-two setting `H = ker λ ⊂ G` built on them.

use std::sync::Arc;

use super::{character_table, character_table_with_modulus, CharacterTable, VirtualCharacter};
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::group::{coset_representatives, kernel_embedding, GroupTable, SignHomomorphism, SubgroupEmbedding};

fn same_group(a: &Arc<GroupTable>, b: &Arc<GroupTable>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

fn check_tables(
    ambient: &CharacterTable,
    sub: &CharacterTable,
    emb: &SubgroupEmbedding,
) -> Result<()> {
    if !same_group(ambient.group(), emb.ambient()) || !same_group(sub.group(), emb.subgroup()) {
        return Err(Error::MismatchedGroups);
    }
    if ambient.modulus() != sub.modulus() {
        return Err(Error::MismatchedGroups);
    }
    Ok(())
}

/// `res_H φ`: the values of `φ` on `H`, decomposed over `Irr(H)`.
pub fn restrict(
    phi: &VirtualCharacter,
    emb: &SubgroupEmbedding,
    sub_table: &Arc<CharacterTable>,
) -> Result<VirtualCharacter> {
    check_tables(phi.table(), sub_table, emb)?;
    let ambient_values = phi.class_values();
    let g_classes = phi.table().classes();
    let values: Vec<Cyclotomic> = sub_table
        .classes()
        .representatives()
        .iter()
        .map(|&h| ambient_values[g_classes.class_of(emb.include(h))].clone())
        .collect();
    VirtualCharacter::from_values(sub_table, &values)
}

/// Left transversal of `H` in `G`, each representative minimal in its coset.
fn left_transversal(emb: &SubgroupEmbedding) -> Vec<usize> {
    let g = emb.ambient();
    let mut covered = vec![false; g.order()];
    let mut reps = Vec::with_capacity(emb.index());
    for x in 0..g.order() {
        if covered[x] {
            continue;
        }
        reps.push(x);
        for &h in emb.inclusion() {
            covered[g.mul(x, h)] = true;
        }
    }
    reps
}

/// `ind_H^G χ` by the Frobenius formula over a left transversal `{t}`:
/// `(ind χ)(g) = Σ_t χ°(t⁻¹ g t)`, with `χ°` zero off `H`.
pub fn induce(
    chi: &VirtualCharacter,
    emb: &SubgroupEmbedding,
    ambient_table: &Arc<CharacterTable>,
) -> Result<VirtualCharacter> {
    check_tables(ambient_table, chi.table(), emb)?;
    let g = emb.ambient();
    let sub_values = chi.class_values();
    let h_classes = chi.table().classes();
    let transversal = left_transversal(emb);
    let field = ambient_table.field();
    let values: Vec<Cyclotomic> = ambient_table
        .classes()
        .representatives()
        .iter()
        .map(|&x| {
            let mut acc = Cyclotomic::zero(field);
            for &t in &transversal {
                if let Some(h) = emb.position(g.conjugate(x, t)) {
                    acc = &acc + &sub_values[h_classes.class_of(h)];
                }
            }
            acc
        })
        .collect();
    VirtualCharacter::from_values(ambient_table, &values)
}

/// `ᵍχ : h ↦ χ(g⁻¹ h g)` for an ambient element `g`; requires `H` normal.
pub fn conjugate_twist(chi: &VirtualCharacter, emb: &SubgroupEmbedding, g: usize) -> Result<VirtualCharacter> {
    let ambient = emb.ambient();
    if g >= ambient.order() {
        return Err(Error::ElementOutOfRange(g));
    }
    if !same_group(chi.table().group(), emb.subgroup()) {
        return Err(Error::MismatchedGroups);
    }
    let values = twisted_values(chi.table(), emb, &chi.class_values(), g)?;
    VirtualCharacter::from_values(chi.table(), &values)
}

fn twisted_values(
    table: &CharacterTable,
    emb: &SubgroupEmbedding,
    values: &[Cyclotomic],
    g: usize,
) -> Result<Vec<Cyclotomic>> {
    let ambient = emb.ambient();
    let classes = table.classes();
    classes
        .representatives()
        .iter()
        .map(|&h| {
            let y = ambient.conjugate(emb.include(h), g);
            let pos = emb
                .position(y)
                .ok_or_else(|| Error::Internal("subgroup is not normal".into()))?;
            Ok(values[classes.class_of(pos)].clone())
        })
        .collect()
}

/// Stabilizer of an irreducible of `H` under the twist action.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Isotropy {
    /// `G_χ = G`: the character is twist-fixed.
    Whole,
    /// `G_χ = H`: the character is moved by every element of `G∖H`.
    Kernel,
}

/// The `G`-orbits on `Irr(H)` with their isotropy and representatives.
/// Orbits are listed by ascending representative, and the representative
/// is the member that comes first in the canonical character order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitData {
    pub orbits: Vec<Vec<usize>>,
    pub isotropy: Vec<Isotropy>,
    pub representatives: Vec<usize>,
}

impl OrbitData {
    /// Orbits of an involutive permutation of `Irr(H)`.
    pub fn from_permutation(perm: &[usize]) -> OrbitData {
        let mut orbits = Vec::new();
        let mut seen = vec![false; perm.len()];
        for i in 0..perm.len() {
            if seen[i] {
                continue;
            }
            let mut orbit = vec![i];
            seen[i] = true;
            let mut j = perm[i];
            while j != i {
                seen[j] = true;
                orbit.push(j);
                j = perm[j];
            }
            orbit.sort_unstable();
            orbits.push(orbit);
        }
        let isotropy = orbits
            .iter()
            .map(|o| if o.len() == 1 { Isotropy::Whole } else { Isotropy::Kernel })
            .collect();
        let representatives = orbits.iter().map(|o| o[0]).collect();
        OrbitData {
            orbits,
            isotropy,
            representatives,
        }
    }

    pub fn count(&self, iso: Isotropy) -> usize {
        self.isotropy.iter().filter(|&&i| i == iso).count()
    }
}

/// A finite group with a sign homomorphism, its kernel `H`, both character
/// tables in one cyclotomic field, and the canonical `b ∈ G∖H`.
pub struct SignedGroup {
    lambda: SignHomomorphism,
    embedding: SubgroupEmbedding,
    g_table: Arc<CharacterTable>,
    h_table: Arc<CharacterTable>,
    cosets: Vec<usize>,
    restriction: Vec<Vec<i64>>,
    twist: Vec<usize>,
    lambda_character: usize,
}

impl SignedGroup {
    pub fn new(g: &Arc<GroupTable>, lambda: &SignHomomorphism) -> Result<SignedGroup> {
        SignedGroup::with_table(character_table(g)?, lambda)
    }

    /// Reuses an existing table of `G` (its field must be `Q(ζ_exp(G))`).
    pub fn with_table(g_table: Arc<CharacterTable>, lambda: &SignHomomorphism) -> Result<SignedGroup> {
        let g = g_table.group().clone();
        lambda.validate_shape(&g)?;
        let embedding = kernel_embedding(&g, lambda)?;
        let h_table = character_table_with_modulus(embedding.subgroup(), g_table.modulus())?;
        let cosets = coset_representatives(&g, lambda);

        let restriction = (0..g_table.len())
            .map(|i| {
                restrict(&VirtualCharacter::irreducible(&g_table, i), &embedding, &h_table)
                    .map(|v| v.coefficients().to_vec())
            })
            .collect::<Result<Vec<_>>>()?;
        let twist = twist_permutation(&h_table, &embedding, cosets[0])?;

        let field = g_table.field();
        let lambda_values: Vec<Cyclotomic> = g_table
            .classes()
            .representatives()
            .iter()
            .map(|&x| Cyclotomic::from_int(field, lambda.value(x) as i64))
            .collect();
        let lambda_character = g_table
            .find_row(&lambda_values)
            .ok_or_else(|| Error::Internal("λ is not an irreducible character".into()))?;

        Ok(SignedGroup {
            lambda: lambda.clone(),
            embedding,
            g_table,
            h_table,
            cosets,
            restriction,
            twist,
            lambda_character,
        })
    }

    pub fn group(&self) -> &Arc<GroupTable> {
        self.embedding.ambient()
    }

    pub fn lambda(&self) -> &SignHomomorphism {
        &self.lambda
    }

    pub fn embedding(&self) -> &SubgroupEmbedding {
        &self.embedding
    }

    pub fn g_table(&self) -> &Arc<CharacterTable> {
        &self.g_table
    }

    pub fn h_table(&self) -> &Arc<CharacterTable> {
        &self.h_table
    }

    /// The canonical `b`, the smallest element of `G∖H`.
    pub fn b(&self) -> usize {
        self.cosets[0]
    }

    /// All of `G∖H`, ascending.
    pub fn non_kernel(&self) -> &[usize] {
        &self.cosets
    }

    /// `λ_ℂ` as an irreducible of `G`.
    pub fn lambda_character(&self) -> VirtualCharacter {
        VirtualCharacter::irreducible(&self.g_table, self.lambda_character)
    }

    pub fn lambda_character_index(&self) -> usize {
        self.lambda_character
    }

    /// `res_H` through the precomputed restriction of every irreducible.
    pub fn restrict(&self, phi: &VirtualCharacter) -> Result<VirtualCharacter> {
        if !Arc::ptr_eq(phi.table(), &self.g_table) {
            return Err(Error::MismatchedGroups);
        }
        let mut coeffs = vec![0i64; self.h_table.len()];
        for (c, row) in phi.coefficients().iter().zip(&self.restriction) {
            for (acc, r) in coeffs.iter_mut().zip(row) {
                *acc += c * r;
            }
        }
        VirtualCharacter::new(&self.h_table, coeffs)
    }

    pub fn induce(&self, chi: &VirtualCharacter) -> Result<VirtualCharacter> {
        induce(chi, &self.embedding, &self.g_table)
    }

    /// `ᵇχ` for the canonical `b`, applied as a permutation of `Irr(H)`.
    pub fn twist(&self, chi: &VirtualCharacter) -> Result<VirtualCharacter> {
        if !Arc::ptr_eq(chi.table(), &self.h_table) {
            return Err(Error::MismatchedGroups);
        }
        let mut coeffs = vec![0i64; self.h_table.len()];
        for (i, &c) in chi.coefficients().iter().enumerate() {
            coeffs[self.twist[i]] += c;
        }
        VirtualCharacter::new(&self.h_table, coeffs)
    }

    /// `i ↦ index of ᵇχ_i` for the canonical `b`.
    pub fn twist_permutation(&self) -> &[usize] {
        &self.twist
    }

    /// The twist permutation for an arbitrary ambient element.
    pub fn twist_permutation_by(&self, g: usize) -> Result<Vec<usize>> {
        if g >= self.group().order() {
            return Err(Error::ElementOutOfRange(g));
        }
        twist_permutation(&self.h_table, &self.embedding, g)
    }

    pub fn orbits(&self) -> OrbitData {
        OrbitData::from_permutation(&self.twist)
    }

    /// Orbits computed with `b` in place of the canonical choice.
    pub fn orbits_with(&self, b: usize) -> Result<OrbitData> {
        Ok(OrbitData::from_permutation(&self.twist_permutation_by(b)?))
    }
}

impl SignHomomorphism {
    fn validate_shape(&self, g: &GroupTable) -> Result<()> {
        if self.values().len() != g.order() {
            return Err(Error::MismatchedGroups);
        }
        Ok(())
    }
}

fn twist_permutation(h_table: &CharacterTable, emb: &SubgroupEmbedding, g: usize) -> Result<Vec<usize>> {
    (0..h_table.len())
        .map(|i| {
            let values = twisted_values(h_table, emb, h_table.row(i), g)?;
            h_table
                .find_row(&values)
                .ok_or_else(|| Error::Internal("twisted character is not irreducible".into()))
        })
        .collect()
}

/// The orbits of the twist by the canonical `b` on `Irr(ker λ)`.
pub fn g_orbits_on_irr(g: &Arc<GroupTable>, lambda: &SignHomomorphism) -> Result<OrbitData> {
    Ok(SignedGroup::new(g, lambda)?.orbits())
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
    fn s3_restriction_and_induction() {
        let s = setting(GroupSpec::Symmetric(3), &[-1, 1]);
        let (gt, ht) = (s.g_table().clone(), s.h_table().clone());
        assert_eq!(ht.len(), 3);
        // trivial restricts to trivial, λ_ℂ restricts to trivial
        assert_eq!(s.restrict(&VirtualCharacter::trivial(&gt)).unwrap(), VirtualCharacter::trivial(&ht));
        assert_eq!(s.restrict(&s.lambda_character()).unwrap(), VirtualCharacter::trivial(&ht));
        // the degree-2 irreducible restricts to ω + ω²
        assert_eq!(s.restrict(&VirtualCharacter::irreducible(&gt, 2)).unwrap().coefficients(), &[0, 1, 1]);
        // ind(1) = 1 + λ_ℂ
        let ind1 = s.induce(&VirtualCharacter::trivial(&ht)).unwrap();
        assert_eq!(ind1, &VirtualCharacter::trivial(&gt) + &s.lambda_character());
        // ind(ω) = degree-2 irreducible
        for i in 1..3 {
            let ind = s.induce(&VirtualCharacter::irreducible(&ht, i)).unwrap();
            assert_eq!(ind, VirtualCharacter::irreducible(&gt, 2));
        }
        // regular induces to regular
        assert_eq!(s.induce(&VirtualCharacter::regular(&ht)).unwrap(), VirtualCharacter::regular(&gt));
    }

    #[test]
    fn free_restrict_matches_cached() {
        let s = setting(GroupSpec::Dihedral(6), &[1, -1]);
        for i in 0..s.g_table().len() {
            let phi = VirtualCharacter::irreducible(s.g_table(), i);
            assert_eq!(
                restrict(&phi, s.embedding(), s.h_table()).unwrap(),
                s.restrict(&phi).unwrap()
            );
        }
    }

    #[test]
    fn twist_in_s3() {
        let s = setting(GroupSpec::Symmetric(3), &[-1, 1]);
        assert_eq!(s.twist_permutation(), &[0, 2, 1]);
        let ht = s.h_table();
        for b in s.non_kernel() {
            assert_eq!(s.twist_permutation_by(*b).unwrap(), vec![0, 2, 1]);
        }
        for &h in s.embedding().inclusion() {
            let w = VirtualCharacter::irreducible(ht, 1);
            assert_eq!(conjugate_twist(&w, s.embedding(), h).unwrap(), w);
        }
        assert!(matches!(
            conjugate_twist(&VirtualCharacter::trivial(ht), s.embedding(), 99),
            Err(Error::ElementOutOfRange(99))
        ));
        let o = s.orbits();
        assert_eq!(o.orbits, vec![vec![0], vec![1, 2]]);
        assert_eq!(o.isotropy, vec![Isotropy::Whole, Isotropy::Kernel]);
    }

    #[test]
    fn d4_orbits() {
        let s = setting(GroupSpec::Dihedral(4), &[1, -1]);
        let o = s.orbits();
        assert_eq!(o.count(Isotropy::Whole), 2);
        assert_eq!(o.count(Isotropy::Kernel), 1);
        // the fixed characters are the real ones (values ±1 on the rotation)
        for (orbit, iso) in o.orbits.iter().zip(&o.isotropy) {
            let real = s.h_table().row(orbit[0]).iter().all(|v| v.as_integer().is_some());
            assert_eq!(real, *iso == Isotropy::Whole);
        }
    }

    #[test]
    fn abelian_orbits_are_fixed_points() {
        let s = setting(GroupSpec::Cyclic(8), &[-1]);
        let o = s.orbits();
        assert_eq!(o.orbits.len(), 4);
        assert!(o.isotropy.iter().all(|&i| i == Isotropy::Whole));
    }

    #[test]
    fn mismatched_tables_rejected() {
        let a = setting(GroupSpec::Symmetric(3), &[-1, 1]);
        let b = setting(GroupSpec::Cyclic(2), &[-1]);
        assert!(a.restrict(&VirtualCharacter::trivial(b.g_table())).is_err());
        assert!(a.twist(&VirtualCharacter::trivial(b.h_table())).is_err());
    }
}
