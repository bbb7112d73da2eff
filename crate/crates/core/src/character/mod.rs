//! Exact character tables and arithmetic in representation rings.

mod dixon;
mod induction;

pub use induction::{
    conjugate_twist, g_orbits_on_irr, induce, restrict, Isotropy, OrbitData, SignedGroup,
};

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::Arc;

use crate::cyclotomic::{weighted_conj_dot, Cyclotomic, CyclotomicField};
use crate::error::{Error, Result};
use crate::group::{conjugacy_classes, ConjugacyClasses, GroupTable};

/// A function on a group that is constant on conjugacy classes, stored as
/// one value per class.
#[derive(Clone, Debug)]
pub struct ClassFunction {
    group: Arc<GroupTable>,
    classes: Arc<ConjugacyClasses>,
    values: Vec<Cyclotomic>,
}

impl ClassFunction {
    pub fn new(
        group: Arc<GroupTable>,
        classes: Arc<ConjugacyClasses>,
        values: Vec<Cyclotomic>,
    ) -> Result<ClassFunction> {
        if values.len() != classes.len() {
            return Err(Error::MismatchedGroups);
        }
        Ok(ClassFunction {
            group,
            classes,
            values,
        })
    }

    pub fn group(&self) -> &Arc<GroupTable> {
        &self.group
    }

    pub fn classes(&self) -> &Arc<ConjugacyClasses> {
        &self.classes
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    /// Value at an element.
    pub fn at(&self, x: usize) -> &Cyclotomic {
        &self.values[self.classes.class_of(x)]
    }

    fn same_group(&self, other: &ClassFunction) -> bool {
        Arc::ptr_eq(&self.classes, &other.classes) || *self.classes == *other.classes
    }

    /// Pointwise product.
    pub fn product(&self, other: &ClassFunction) -> Result<ClassFunction> {
        if !self.same_group(other) {
            return Err(Error::MismatchedGroups);
        }
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a * b).collect();
        Ok(ClassFunction {
            values,
            ..self.clone()
        })
    }
}

impl PartialEq for ClassFunction {
    fn eq(&self, other: &Self) -> bool {
        self.same_group(other) && self.values == other.values
    }
}

/// `⟨φ, ψ⟩ = |G|⁻¹ Σ_g φ(g) · conj(ψ(g))`, computed exactly.
pub fn inner_product(phi: &ClassFunction, psi: &ClassFunction) -> Result<Cyclotomic> {
    if !phi.same_group(psi) {
        return Err(Error::MismatchedGroups);
    }
    let field = phi
        .values
        .first()
        .map(|v| v.field().clone())
        .ok_or(Error::MismatchedGroups)?;
    let sizes: Vec<i64> = phi.classes.class_sizes().iter().map(|&s| s as i64).collect();
    let sum = weighted_conj_dot(&field, &sizes, &phi.values, &psi.values);
    Ok(sum.div_int(phi.group.order() as i64))
}

/// The irreducible characters of a finite group, exactly.
///
/// Rows are ordered by degree, then with the trivial character first, then
/// by descending value vector (classes in canonical order, values compared
/// by their power-basis coefficients).
pub struct CharacterTable {
    group: Arc<GroupTable>,
    classes: Arc<ConjugacyClasses>,
    field: Arc<CyclotomicField>,
    rows: Vec<Vec<Cyclotomic>>,
    degrees: Vec<usize>,
    // per irreducible: |C_j| · const(ζ^t · conj χ(g_j)) at index j·φ(m) + t
    weights: Vec<Vec<i64>>,
    row_index: HashMap<Vec<Cyclotomic>, usize>,
    // Rows as concatenated numerator vectors, and their index for the
    // irreducible fast path.
    flat_rows: Vec<Vec<i64>>,
    flat_index: HashMap<Vec<i64>, usize>,
}

impl fmt::Debug for CharacterTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CharacterTable")
            .field("order", &self.group.order())
            .field("modulus", &self.field.modulus())
            .field("degrees", &self.degrees)
            .finish_non_exhaustive()
    }
}

/// Character table with values in `Q(ζ_e)`, `e` the exponent of `g`.
pub fn character_table(g: &Arc<GroupTable>) -> Result<Arc<CharacterTable>> {
    character_table_with_modulus(g, g.exponent() as u32)
}

/// Character table with values in `Q(ζ_m)`; `m` must be a multiple of the
/// exponent of `g`. Used to put a subgroup's table in the ambient field.
pub fn character_table_with_modulus(g: &Arc<GroupTable>, modulus: u32) -> Result<Arc<CharacterTable>> {
    let classes = Arc::new(conjugacy_classes(g));
    let field = CyclotomicField::get(modulus);
    let mut rows = dixon::irreducible_values(g, &classes, &field)?;

    let is_trivial = |r: &(usize, Vec<Cyclotomic>)| r.1.iter().all(|v| v.as_integer() == Some(1));
    rows.sort_by(|a, b| {
        a.0.cmp(&b.0)
            .then_with(|| is_trivial(b).cmp(&is_trivial(a)))
            .then_with(|| b.1.cmp(&a.1))
    });
    let degrees: Vec<usize> = rows.iter().map(|r| r.0).collect();
    let rows: Vec<Vec<Cyclotomic>> = rows.into_iter().map(|r| r.1).collect();

    if degrees.iter().map(|d| d * d).sum::<usize>() != g.order() {
        return Err(Error::Internal("sum of squared degrees differs from the order".into()));
    }
    Ok(Arc::new(CharacterTable::assemble(g.clone(), classes, field, rows, degrees)))
}

impl CharacterTable {
    fn assemble(
        group: Arc<GroupTable>,
        classes: Arc<ConjugacyClasses>,
        field: Arc<CyclotomicField>,
        rows: Vec<Vec<Cyclotomic>>,
        degrees: Vec<usize>,
    ) -> CharacterTable {
        let m = field.modulus() as usize;
        let phi = field.degree();
        let const_of_power: Vec<i64> = (0..m)
            .map(|k| Cyclotomic::zeta_pow(&field, k as i64).coefficients()[0])
            .collect();
        let weights = rows
            .iter()
            .map(|row| {
                let mut w = vec![0i64; classes.len() * phi];
                for (j, value) in row.iter().enumerate() {
                    let c = value.conj();
                    let size = classes.size(j) as i64;
                    for t in 0..phi {
                        let s: i64 = c
                            .coefficients()
                            .iter()
                            .enumerate()
                            .map(|(u, &cu)| cu * const_of_power[(t + u) % m])
                            .sum();
                        w[j * phi + t] = size * s;
                    }
                }
                w
            })
            .collect();
        let row_index = rows.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        let flat_rows: Vec<Vec<i64>> = rows
            .iter()
            .map(|r| r.iter().flat_map(|v| v.coefficients().iter().copied()).collect())
            .collect();
        let flat_index = flat_rows.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        CharacterTable {
            group,
            classes,
            field,
            rows,
            degrees,
            weights,
            row_index,
            flat_rows,
            flat_index,
        }
    }

    pub fn group(&self) -> &Arc<GroupTable> {
        &self.group
    }

    pub fn classes(&self) -> &Arc<ConjugacyClasses> {
        &self.classes
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn modulus(&self) -> u32 {
        self.field.modulus()
    }

    /// Number of irreducible characters.
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn degree(&self, i: usize) -> usize {
        self.degrees[i]
    }

    /// `χ_i` on class `j`.
    pub fn value(&self, i: usize, j: usize) -> &Cyclotomic {
        &self.rows[i][j]
    }

    pub fn row(&self, i: usize) -> &[Cyclotomic] {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[Vec<Cyclotomic>] {
        &self.rows
    }

    pub fn irreducible(&self, i: usize) -> ClassFunction {
        ClassFunction {
            group: self.group.clone(),
            classes: self.classes.clone(),
            values: self.rows[i].clone(),
        }
    }

    /// Index of the irreducible with exactly these class values.
    pub fn find_row(&self, values: &[Cyclotomic]) -> Option<usize> {
        self.row_index.get(values).copied()
    }

    /// Integer coordinates of a class function over the irreducibles.
    ///
    /// Fails with an internal error when the input is not a virtual
    /// character; the result is confirmed by exact reconstruction.
    pub fn decompose_values(&self, values: &[Cyclotomic]) -> Result<Vec<i64>> {
        let phi = self.field.degree();
        if values.len() != self.classes.len() {
            return Err(Error::MismatchedGroups);
        }
        let mut flat = Vec::with_capacity(values.len() * phi);
        for v in values {
            if v.modulus() != self.modulus() {
                return Err(Error::MismatchedGroups);
            }
            if v.denominator() != 1 {
                return Err(Error::Internal("class function value is not integral".into()));
            }
            flat.extend_from_slice(v.coefficients());
        }
        self.decompose_flat(&flat)
    }

    // `flat[j·φ + t]` is numerator `t` of the value on class `j`.
    fn decompose_flat(&self, flat: &[i64]) -> Result<Vec<i64>> {
        if let Some(&i) = self.flat_index.get(flat) {
            let mut coords = vec![0i64; self.rows.len()];
            coords[i] = 1;
            return Ok(coords);
        }
        let order = self.group.order() as i64;
        let coords = self
            .weights
            .iter()
            .map(|w| {
                let s: i64 = w.iter().zip(flat).map(|(a, b)| a * b).sum();
                if s % order != 0 {
                    Err(Error::Internal(format!(
                        "non-integral multiplicity {s}/{order} in decomposition"
                    )))
                } else {
                    Ok(s / order)
                }
            })
            .collect::<Result<Vec<i64>>>()?;
        if self.combine_flat(&coords) != flat {
            return Err(Error::Internal(
                "class function is not in the span of the irreducibles".into(),
            ));
        }
        Ok(coords)
    }

    pub fn decompose(&self, f: &ClassFunction) -> Result<Vec<i64>> {
        if !(Arc::ptr_eq(&f.classes, &self.classes) || *f.classes == *self.classes) {
            return Err(Error::MismatchedGroups);
        }
        self.decompose_values(&f.values)
    }

    /// Class values of `Σ coeffs[i] χ_i`.
    pub fn combine(&self, coeffs: &[i64]) -> Vec<Cyclotomic> {
        self.combine_flat(coeffs)
            .chunks(self.field.degree())
            .map(|chunk| {
                Cyclotomic::from_parts(&self.field, chunk.to_vec(), 1).expect("chunk has field degree")
            })
            .collect()
    }

    /// Whether `Σ coeffs[i] χ_i` has exactly the given class values.
    pub fn has_values(&self, coeffs: &[i64], values: &[Cyclotomic]) -> bool {
        let phi = self.field.degree();
        values.len() == self.classes.len()
            && values.iter().all(|v| v.modulus() == self.modulus() && v.denominator() == 1)
            && self
                .combine_flat(coeffs)
                .chunks(phi)
                .zip(values)
                .all(|(chunk, v)| chunk == v.coefficients())
    }

    /// As [`has_values`](Self::has_values), with the values given as
    /// concatenated power-basis numerators.
    pub(crate) fn has_flat_values(&self, coeffs: &[i64], flat: &[i64]) -> bool {
        self.combine_flat(coeffs) == flat
    }

    fn combine_flat(&self, coeffs: &[i64]) -> Vec<i64> {
        let phi = self.field.degree();
        let mut acc = vec![0i64; self.classes.len() * phi];
        for (&c, row) in coeffs.iter().zip(&self.flat_rows) {
            if c != 0 {
                for (a, &x) in acc.iter_mut().zip(row) {
                    *a += c * x;
                }
            }
        }
        acc
    }

    /// Plain-data copy of the table for independent checking.
    pub fn values(&self) -> TableValues {
        TableValues {
            order: self.group.order(),
            class_sizes: self.classes.class_sizes().to_vec(),
            inverse_class: (0..self.classes.len()).map(|j| self.classes.inverse_class(j)).collect(),
            rows: self.rows.clone(),
        }
    }
}

/// The numerical content of a character table, detached from the group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableValues {
    pub order: usize,
    pub class_sizes: Vec<usize>,
    pub inverse_class: Vec<usize>,
    pub rows: Vec<Vec<Cyclotomic>>,
}

/// An element of the representation ring `R(G)`: integer coordinates over
/// the irreducibles of one character table.
#[derive(Clone)]
pub struct VirtualCharacter {
    table: Arc<CharacterTable>,
    coeffs: Vec<i64>,
}

impl fmt::Debug for VirtualCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VirtualCharacter{:?}", self.coeffs)
    }
}

impl PartialEq for VirtualCharacter {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.table, &other.table) && self.coeffs == other.coeffs
    }
}

impl Eq for VirtualCharacter {}

impl VirtualCharacter {
    pub fn new(table: &Arc<CharacterTable>, coeffs: Vec<i64>) -> Result<VirtualCharacter> {
        if coeffs.len() != table.len() {
            return Err(Error::MismatchedGroups);
        }
        Ok(VirtualCharacter {
            table: table.clone(),
            coeffs,
        })
    }

    pub fn zero(table: &Arc<CharacterTable>) -> VirtualCharacter {
        VirtualCharacter {
            table: table.clone(),
            coeffs: vec![0; table.len()],
        }
    }

    pub fn irreducible(table: &Arc<CharacterTable>, i: usize) -> VirtualCharacter {
        let mut v = VirtualCharacter::zero(table);
        v.coeffs[i] = 1;
        v
    }

    pub fn trivial(table: &Arc<CharacterTable>) -> VirtualCharacter {
        VirtualCharacter::irreducible(table, 0)
    }

    /// The character of the regular representation, `Σ χ(1) χ`.
    pub fn regular(table: &Arc<CharacterTable>) -> VirtualCharacter {
        VirtualCharacter {
            table: table.clone(),
            coeffs: table.degrees.iter().map(|&d| d as i64).collect(),
        }
    }

    /// Decomposes a class function that is known to be a virtual character.
    pub fn from_class_function(table: &Arc<CharacterTable>, f: &ClassFunction) -> Result<VirtualCharacter> {
        let coeffs = table.decompose(f)?;
        Ok(VirtualCharacter {
            table: table.clone(),
            coeffs,
        })
    }

    pub(crate) fn from_values(table: &Arc<CharacterTable>, values: &[Cyclotomic]) -> Result<VirtualCharacter> {
        let coeffs = table.decompose_values(values)?;
        Ok(VirtualCharacter {
            table: table.clone(),
            coeffs,
        })
    }

    pub fn table(&self) -> &Arc<CharacterTable> {
        &self.table
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Whether this is the character of a genuine representation.
    pub fn is_character(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0)
    }

    /// Virtual dimension, the value at the identity.
    pub fn degree(&self) -> i64 {
        self.coeffs
            .iter()
            .zip(&self.table.degrees)
            .map(|(&c, &d)| c * d as i64)
            .sum()
    }

    pub fn class_values(&self) -> Vec<Cyclotomic> {
        self.table.combine(&self.coeffs)
    }

    pub fn to_class_function(&self) -> ClassFunction {
        ClassFunction {
            group: self.table.group.clone(),
            classes: self.table.classes.clone(),
            values: self.class_values(),
        }
    }

    pub fn same_table(&self, other: &VirtualCharacter) -> bool {
        Arc::ptr_eq(&self.table, &other.table)
    }

    pub fn scale(&self, k: i64) -> VirtualCharacter {
        VirtualCharacter {
            table: self.table.clone(),
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// Tensor product, computed pointwise and re-decomposed.
    pub fn tensor(&self, other: &VirtualCharacter) -> Result<VirtualCharacter> {
        if !self.same_table(other) {
            return Err(Error::MismatchedGroups);
        }
        let table = &self.table;
        let phi = table.field.degree();
        let a = table.combine_flat(&self.coeffs);
        let b = table.combine_flat(&other.coeffs);
        let mut prod = vec![0i64; a.len()];
        for ((x, y), out) in a.chunks(phi).zip(b.chunks(phi)).zip(prod.chunks_mut(phi)) {
            table.field.mul_numerators(x, y, out);
        }
        Ok(VirtualCharacter {
            table: table.clone(),
            coeffs: table.decompose_flat(&prod)?,
        })
    }

    /// The dual (complex conjugate) character.
    pub fn dual(&self) -> Result<VirtualCharacter> {
        let values: Vec<Cyclotomic> = self.class_values().iter().map(Cyclotomic::conj).collect();
        VirtualCharacter::from_values(&self.table, &values)
    }

    pub fn checked_add(&self, other: &VirtualCharacter) -> Result<VirtualCharacter> {
        if !self.same_table(other) {
            return Err(Error::MismatchedGroups);
        }
        Ok(VirtualCharacter {
            table: self.table.clone(),
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn checked_sub(&self, other: &VirtualCharacter) -> Result<VirtualCharacter> {
        self.checked_add(&-other)
    }
}

/// Renders as an integer combination of `χ_i`, e.g. `2χ0 − χ3`.
impl fmt::Display for VirtualCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = match (first, c < 0) {
                (true, true) => "−",
                (true, false) => "",
                (false, true) => " − ",
                (false, false) => " + ",
            };
            let mag = c.unsigned_abs();
            if mag == 1 {
                write!(f, "{sign}χ{i}")?;
            } else {
                write!(f, "{sign}{mag}χ{i}")?;
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Panics if the operands come from different tables.
impl Add for &VirtualCharacter {
    type Output = VirtualCharacter;
    fn add(self, rhs: &VirtualCharacter) -> VirtualCharacter {
        self.checked_add(rhs).expect("virtual characters on different tables")
    }
}

/// Panics if the operands come from different tables.
impl Sub for &VirtualCharacter {
    type Output = VirtualCharacter;
    fn sub(self, rhs: &VirtualCharacter) -> VirtualCharacter {
        self.checked_sub(rhs).expect("virtual characters on different tables")
    }
}

impl Neg for &VirtualCharacter {
    type Output = VirtualCharacter;
    fn neg(self) -> VirtualCharacter {
        self.scale(-1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_group, GroupSpec};

    fn table(spec: GroupSpec) -> Arc<CharacterTable> {
        character_table(&build_group(&spec).unwrap()).unwrap()
    }

    fn ints(row: &[Cyclotomic]) -> Vec<i64> {
        row.iter().map(|v| v.as_integer().expect("integer value")).collect()
    }

    #[test]
    fn display_virtual_characters() {
        let t = table(GroupSpec::Dihedral(4));
        let show = |c: Vec<i64>| VirtualCharacter::new(&t, c).unwrap().to_string();
        assert_eq!(show(vec![0, 1, 0, -1, 0]), "χ1 − χ3");
        assert_eq!(show(vec![-2, 0, 0, 0, 3]), "−2χ0 + 3χ4");
        assert_eq!(show(vec![0; 5]), "0");
    }

    #[test]
    fn trivial_group_table() {
        let t = table(GroupSpec::Cyclic(1));
        assert_eq!(t.len(), 1);
        assert_eq!(ints(t.row(0)), vec![1]);
    }

    #[test]
    fn cyclic_three() {
        let t = table(GroupSpec::Cyclic(3));
        assert_eq!(t.degrees(), &[1, 1, 1]);
        let f = t.field().clone();
        let w = Cyclotomic::zeta_pow(&f, 1);
        let w2 = Cyclotomic::zeta_pow(&f, 2);
        let one = Cyclotomic::one(&f);
        assert_eq!(t.row(0), &[one.clone(), one.clone(), one.clone()]);
        let mut rest: Vec<Vec<Cyclotomic>> = t.rows()[1..].to_vec();
        rest.sort();
        let mut expected = vec![
            vec![one.clone(), w.clone(), w2.clone()],
            vec![one.clone(), w2.clone(), w.clone()],
        ];
        expected.sort();
        assert_eq!(rest, expected);
    }

    #[test]
    fn symmetric_three() {
        let t = table(GroupSpec::Symmetric(3));
        assert_eq!(t.degrees(), &[1, 1, 2]);
        // classes: identity, transpositions, 3-cycles
        assert_eq!(ints(t.row(2)), vec![2, 0, -1]);
        assert_eq!(ints(t.row(0)), vec![1, 1, 1]);
        assert_eq!(ints(t.row(1)), vec![1, -1, 1]);
    }

    #[test]
    fn quaternion_degrees() {
        let t = table(GroupSpec::Quaternion);
        assert_eq!(t.degrees(), &[1, 1, 1, 1, 2]);
    }

    #[test]
    fn tables_are_orthonormal() {
        for spec in [
            GroupSpec::Cyclic(12),
            GroupSpec::Dihedral(5),
            GroupSpec::Symmetric(4),
            GroupSpec::Alternating(4),
            GroupSpec::Alternating(5),
            GroupSpec::direct_product(GroupSpec::Quaternion, GroupSpec::Cyclic(3)),
        ] {
            let t = table(spec.clone());
            assert_eq!(t.len(), t.classes().len(), "{spec}");
            for i in 0..t.len() {
                for j in 0..t.len() {
                    let ip = inner_product(&t.irreducible(i), &t.irreducible(j)).unwrap();
                    assert_eq!(ip.as_integer(), Some((i == j) as i64), "{spec} ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn a5_has_irrational_values() {
        let t = table(GroupSpec::Alternating(5));
        assert_eq!(t.degrees(), &[1, 3, 3, 4, 5]);
        assert!(t.rows().iter().flatten().any(|v| v.as_rational().is_none()));
    }

    #[test]
    fn inner_product_examples() {
        let t = table(GroupSpec::Symmetric(3));
        let reg = VirtualCharacter::regular(&t).to_class_function();
        let triv = t.irreducible(0);
        assert_eq!(inner_product(&triv, &reg).unwrap().as_integer(), Some(1));
        assert_eq!(reg.values()[0].as_integer(), Some(6));
        assert!(reg.values()[1..].iter().all(Cyclotomic::is_zero));
    }

    #[test]
    fn decomposition_rejects_non_characters() {
        let t = table(GroupSpec::Cyclic(2));
        let f = t.field().clone();
        let half = vec![Cyclotomic::from_int(&f, 1), Cyclotomic::from_int(&f, 0)];
        assert!(matches!(t.decompose_values(&half), Err(Error::Internal(_))));
        let reg = vec![Cyclotomic::from_int(&f, 2), Cyclotomic::from_int(&f, 0)];
        assert_eq!(t.decompose_values(&reg).unwrap(), vec![1, 1]);
    }

    #[test]
    fn tensor_in_s3() {
        let t = table(GroupSpec::Symmetric(3));
        let sgn = VirtualCharacter::irreducible(&t, 1);
        let rho = VirtualCharacter::irreducible(&t, 2);
        assert_eq!(sgn.tensor(&rho).unwrap(), rho);
        assert_eq!(rho.tensor(&rho).unwrap().coefficients(), &[1, 1, 1]);
        assert_eq!(sgn.tensor(&sgn).unwrap(), VirtualCharacter::trivial(&t));
    }

    #[test]
    fn subgroup_table_in_ambient_field_matches_embedded_own_table() {
        let g = build_group(&GroupSpec::Cyclic(3)).unwrap();
        let own = character_table(&g).unwrap();
        let ambient = character_table_with_modulus(&g, 6).unwrap();
        let mut embedded: Vec<Vec<Cyclotomic>> = own
            .rows()
            .iter()
            .map(|r| r.iter().map(|v| v.embed(ambient.field()).unwrap()).collect())
            .collect();
        let mut direct = ambient.rows().to_vec();
        embedded.sort();
        direct.sort();
        assert_eq!(embedded, direct);
    }

    #[test]
    fn table_is_deterministic() {
        let a = table(GroupSpec::Symmetric(4));
        let b = table(GroupSpec::Symmetric(4));
        assert_eq!(a.rows(), b.rows());
    }
}
