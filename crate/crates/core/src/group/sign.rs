use std::collections::VecDeque;
use std::fmt;
use std::sync::Arc;

use super::GroupTable;
use crate::error::{Error, Result};

/// A surjection `G → {±1}`, stored as its value on every element together
/// with its values on the group's generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignHomomorphism {
    values: Vec<i8>,
    generator_signs: Vec<i8>,
}

impl SignHomomorphism {
    /// Extends `signs` (one per generator of `g`) multiplicatively.
    pub fn from_generator_signs(g: &GroupTable, signs: &[i8]) -> Result<SignHomomorphism> {
        let gens = g.generators();
        if signs.len() != gens.len() {
            return Err(Error::NotHomomorphism(format!(
                "{} signs given for {} generators",
                signs.len(),
                gens.len()
            )));
        }
        if let Some(bad) = signs.iter().find(|&&s| s != 1 && s != -1) {
            return Err(Error::NotHomomorphism(format!("sign {bad} is not ±1")));
        }
        let values = extend_signs(g, signs)?;
        let lambda = SignHomomorphism {
            values,
            generator_signs: signs.to_vec(),
        };
        lambda.check_surjective()?;
        Ok(lambda)
    }

    /// Takes explicit values on every element; multiplicativity is checked
    /// exhaustively.
    pub fn from_values(g: &GroupTable, values: Vec<i8>) -> Result<SignHomomorphism> {
        if values.len() != g.order() {
            return Err(Error::NotHomomorphism(format!(
                "{} values given for a group of order {}",
                values.len(),
                g.order()
            )));
        }
        let generator_signs = g.generators().iter().map(|&x| values[x]).collect();
        let lambda = SignHomomorphism {
            values,
            generator_signs,
        };
        lambda.validate(g)?;
        Ok(lambda)
    }

    fn check_surjective(&self) -> Result<()> {
        if self.values.iter().any(|&v| v == -1) {
            Ok(())
        } else {
            Err(Error::NotSurjective)
        }
    }

    /// Exhaustive check: values are ±1, multiplicative, and both signs occur.
    pub fn validate(&self, g: &GroupTable) -> Result<()> {
        let n = g.order();
        if self.values.len() != n {
            return Err(Error::MismatchedGroups);
        }
        if let Some(bad) = self.values.iter().find(|&&s| s != 1 && s != -1) {
            return Err(Error::NotHomomorphism(format!("value {bad} is not ±1")));
        }
        for a in 0..n {
            for b in 0..n {
                if self.values[g.mul(a, b)] != self.values[a] * self.values[b] {
                    return Err(Error::NotHomomorphism(format!(
                        "λ({} · {}) ≠ λ({})λ({})",
                        g.label(a),
                        g.label(b),
                        g.label(a),
                        g.label(b)
                    )));
                }
            }
        }
        self.check_surjective()
    }

    pub fn value(&self, x: usize) -> i8 {
        self.values[x]
    }

    pub fn values(&self) -> &[i8] {
        &self.values
    }

    pub fn generator_signs(&self) -> &[i8] {
        &self.generator_signs
    }

    pub fn in_kernel(&self, x: usize) -> bool {
        self.values[x] == 1
    }
}

impl fmt::Display for SignHomomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<&str> = self
            .generator_signs
            .iter()
            .map(|&s| if s > 0 { "+" } else { "-" })
            .collect();
        write!(f, "[{}]", body.join(","))
    }
}

fn extend_signs(g: &GroupTable, signs: &[i8]) -> Result<Vec<i8>> {
    let gens = g.generators();
    let mut values = vec![0i8; g.order()];
    values[0] = 1;
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for (&s, &sign) in gens.iter().zip(signs) {
            let y = g.mul(x, s);
            let v = values[x] * sign;
            if values[y] == 0 {
                values[y] = v;
                queue.push_back(y);
            } else if values[y] != v {
                return Err(Error::NotHomomorphism(format!(
                    "inconsistent value at {}",
                    g.label(y)
                )));
            }
        }
    }
    if values.iter().any(|&v| v == 0) {
        return Err(Error::Internal("generators do not generate".into()));
    }
    Ok(values)
}

/// Every surjection onto `{±1}`, enumerated by generator sign pattern with
/// pattern `t` sending generator `i` to `-1` iff bit `i` of `t` is set.
pub fn all_sign_homomorphisms(g: &GroupTable) -> Vec<SignHomomorphism> {
    let k = g.generators().len();
    assert!(k < 20, "too many generators to enumerate sign patterns");
    let mut out = Vec::new();
    for t in 1u32..(1u32 << k) {
        let signs: Vec<i8> = (0..k).map(|i| if t >> i & 1 == 1 { -1 } else { 1 }).collect();
        if let Ok(lambda) = SignHomomorphism::from_generator_signs(g, &signs) {
            out.push(lambda);
        }
    }
    out
}

/// A subgroup with its own table and an inclusion into an ambient group.
#[derive(Clone, Debug)]
pub struct SubgroupEmbedding {
    ambient: Arc<GroupTable>,
    subgroup: Arc<GroupTable>,
    inclusion: Vec<usize>,
    position: Vec<Option<usize>>,
}

impl SubgroupEmbedding {
    /// The subgroup on the ascending element list `elements` (which must
    /// contain the identity and be closed under products).
    pub fn from_elements(ambient: &Arc<GroupTable>, elements: &[usize]) -> Result<SubgroupEmbedding> {
        let mut inclusion = elements.to_vec();
        inclusion.sort_unstable();
        inclusion.dedup();
        if inclusion.first() != Some(&0) {
            return Err(Error::Internal("subgroup must contain the identity".into()));
        }
        if let Some(&bad) = inclusion.iter().find(|&&x| x >= ambient.order()) {
            return Err(Error::ElementOutOfRange(bad));
        }
        let mut position = vec![None; ambient.order()];
        for (i, &x) in inclusion.iter().enumerate() {
            position[x] = Some(i);
        }
        let m = inclusion.len();
        let mut product = Vec::with_capacity(m * m);
        for &a in &inclusion {
            for &b in &inclusion {
                let c = position[ambient.mul(a, b)]
                    .ok_or_else(|| Error::Internal("subset not closed under products".into()))?;
                product.push(c as u32);
            }
        }
        let labels = inclusion.iter().map(|&x| ambient.label(x).to_string()).collect();
        let generators = greedy_generators(ambient, &inclusion, &position);
        let subgroup = GroupTable::from_product_unchecked(m, product, labels, generators)?;
        Ok(SubgroupEmbedding {
            ambient: ambient.clone(),
            subgroup: Arc::new(subgroup),
            inclusion,
            position,
        })
    }

    pub fn ambient(&self) -> &Arc<GroupTable> {
        &self.ambient
    }

    pub fn subgroup(&self) -> &Arc<GroupTable> {
        &self.subgroup
    }

    /// Ambient index of subgroup element `h`.
    pub fn include(&self, h: usize) -> usize {
        self.inclusion[h]
    }

    pub fn inclusion(&self) -> &[usize] {
        &self.inclusion
    }

    /// Subgroup index of ambient element `x`, if it lies in the subgroup.
    pub fn position(&self, x: usize) -> Option<usize> {
        self.position[x]
    }

    pub fn index(&self) -> usize {
        self.ambient.order() / self.subgroup.order()
    }

    /// Whether `g⁻¹Hg = H` for every ambient `g`.
    pub fn is_normal(&self) -> bool {
        (0..self.ambient.order()).all(|g| {
            self.inclusion
                .iter()
                .all(|&h| self.position[self.ambient.conjugate(h, g)].is_some())
        })
    }
}

// Subgroup-local indices of a generating set, chosen greedily in ascending order.
fn greedy_generators(ambient: &GroupTable, elements: &[usize], position: &[Option<usize>]) -> Vec<usize> {
    let mut gens: Vec<usize> = Vec::new();
    let mut covered = vec![false; ambient.order()];
    covered[0] = true;
    for &x in elements {
        if covered[x] {
            continue;
        }
        gens.push(x);
        for y in ambient.closure(&gens) {
            covered[y] = true;
        }
    }
    gens.iter().map(|&x| position[x].expect("generator in subgroup")).collect()
}

/// `H = ker λ` with its table re-indexed by ascending ambient index.
pub fn kernel_embedding(g: &Arc<GroupTable>, lambda: &SignHomomorphism) -> Result<SubgroupEmbedding> {
    if lambda.values().len() != g.order() {
        return Err(Error::MismatchedGroups);
    }
    let kernel: Vec<usize> = (0..g.order()).filter(|&x| lambda.in_kernel(x)).collect();
    if kernel.len() == g.order() {
        return Err(Error::NotSurjective);
    }
    if 2 * kernel.len() != g.order() {
        return Err(Error::Internal("kernel does not have index 2".into()));
    }
    SubgroupEmbedding::from_elements(g, &kernel)
}

/// All of `G∖H`, ascending; the first entry is the canonical choice of `b`.
pub fn coset_representatives(g: &GroupTable, lambda: &SignHomomorphism) -> Vec<usize> {
    (0..g.order()).filter(|&x| !lambda.in_kernel(x)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_group, GroupSpec};

    #[test]
    fn c2_isomorphism() {
        let g = build_group(&GroupSpec::Cyclic(2)).unwrap();
        let lambda = SignHomomorphism::from_generator_signs(&g, &[-1]).unwrap();
        assert_eq!(lambda.values(), &[1, -1]);
        let emb = kernel_embedding(&g, &lambda).unwrap();
        assert_eq!(emb.subgroup().order(), 1);
        assert_eq!(coset_representatives(&g, &lambda), vec![1]);
    }

    #[test]
    fn s3_sign_kernel_is_c3() {
        let g = build_group(&GroupSpec::Symmetric(3)).unwrap();
        // transposition -1, 3-cycle +1
        let lambda = SignHomomorphism::from_generator_signs(&g, &[-1, 1]).unwrap();
        let emb = kernel_embedding(&g, &lambda).unwrap();
        let h = emb.subgroup();
        assert_eq!(h.order(), 3);
        assert!(h.is_abelian());
        assert_eq!(h.exponent(), 3);
        assert!(emb.is_normal());
        let reps = coset_representatives(&g, &lambda);
        assert_eq!(reps.len(), 3);
        assert!(reps.iter().all(|&x| g.element_order(x) == 2));
    }

    #[test]
    fn d4_reflection_kernel_is_c4() {
        let g = build_group(&GroupSpec::Dihedral(4)).unwrap();
        let lambda = SignHomomorphism::from_generator_signs(&g, &[1, -1]).unwrap();
        let emb = kernel_embedding(&g, &lambda).unwrap();
        assert_eq!(emb.inclusion(), &[0, 1, 2, 3]);
        assert_eq!(emb.subgroup().exponent(), 4);
        assert_eq!(coset_representatives(&g, &lambda), vec![4, 5, 6, 7]);
    }

    #[test]
    fn invalid_sign_assignments() {
        let g = build_group(&GroupSpec::Cyclic(3)).unwrap();
        assert!(matches!(
            SignHomomorphism::from_generator_signs(&g, &[-1]),
            Err(Error::NotHomomorphism(_))
        ));
        let g = build_group(&GroupSpec::Cyclic(4)).unwrap();
        assert_eq!(
            SignHomomorphism::from_generator_signs(&g, &[1]).unwrap_err(),
            Error::NotSurjective
        );
        assert!(SignHomomorphism::from_values(&g, vec![1, -1, 1, 1]).is_err());
        assert!(SignHomomorphism::from_values(&g, vec![1, -1, 1, -1]).is_ok());
    }

    #[test]
    fn enumeration_counts() {
        // Hom(G, ±1) has 2^r elements, r the 2-rank of the abelianization.
        let cases = [
            (GroupSpec::Cyclic(5), 0),
            (GroupSpec::Cyclic(6), 1),
            (GroupSpec::Dihedral(4), 3),
            (GroupSpec::Dihedral(5), 1),
            (GroupSpec::Quaternion, 3),
            (GroupSpec::Alternating(4), 0),
            (GroupSpec::Symmetric(4), 1),
            (
                GroupSpec::direct_product(
                    GroupSpec::Cyclic(2),
                    GroupSpec::direct_product(GroupSpec::Cyclic(2), GroupSpec::Cyclic(2)),
                ),
                7,
            ),
        ];
        for (spec, expected) in cases {
            let g = build_group(&spec).unwrap();
            let all = all_sign_homomorphisms(&g);
            assert_eq!(all.len(), expected, "{spec}");
            for lambda in &all {
                lambda.validate(&g).unwrap();
                let emb = kernel_embedding(&g, lambda).unwrap();
                assert!(emb.is_normal());
                emb.subgroup().validate().unwrap();
            }
        }
    }
}
