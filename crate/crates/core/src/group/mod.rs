//! Finite groups as explicit multiplication tables.

mod catalogue;
mod classes;
mod sign;

pub use catalogue::{abelian_invariant_factor_lists, catalogue, CatalogueEntry};
pub use classes::{conjugacy_classes, ConjugacyClasses};
pub use sign::{
    all_sign_homomorphisms, coset_representatives, kernel_embedding, SignHomomorphism,
    SubgroupEmbedding,
};

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest group order built unless the caller raises it.
pub const DEFAULT_ORDER_LIMIT: usize = 1024;

/// A finite group given by its full multiplication table. Element `0` is the
/// identity.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    product: Vec<u32>,
    inverse: Vec<usize>,
    labels: Vec<String>,
    generators: Vec<usize>,
}

impl fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupTable")
            .field("order", &self.order)
            .field("generators", &self.generators)
            .finish_non_exhaustive()
    }
}

impl GroupTable {
    /// Assembles a table from a row-major product map. The identity must be
    /// element `0`; inverses are derived. Group axioms are checked exhaustively.
    pub fn from_product(
        order: usize,
        product: Vec<u32>,
        labels: Vec<String>,
        generators: Vec<usize>,
    ) -> Result<GroupTable> {
        let g = GroupTable::from_product_unchecked(order, product, labels, generators)?;
        g.validate()?;
        Ok(g)
    }

    fn from_product_unchecked(
        order: usize,
        product: Vec<u32>,
        labels: Vec<String>,
        generators: Vec<usize>,
    ) -> Result<GroupTable> {
        if order == 0 || product.len() != order * order || labels.len() != order {
            return Err(Error::Internal("malformed multiplication table".into()));
        }
        if product.iter().any(|&p| p as usize >= order) {
            return Err(Error::Internal("product out of range".into()));
        }
        let mut inverse = vec![usize::MAX; order];
        for a in 0..order {
            for b in 0..order {
                if product[a * order + b] == 0 {
                    inverse[a] = b;
                    break;
                }
            }
        }
        if inverse.iter().any(|&i| i == usize::MAX) {
            return Err(Error::Internal("element without inverse".into()));
        }
        if let Some(&bad) = generators.iter().find(|&&x| x >= order) {
            return Err(Error::ElementOutOfRange(bad));
        }
        Ok(GroupTable {
            order,
            product,
            inverse,
            labels,
            generators,
        })
    }

    /// Exhaustive check of the identity, inverse, associativity and Latin
    /// square laws, and that the generators generate. Cubic in the order.
    pub fn validate(&self) -> Result<()> {
        let n = self.order;
        for a in 0..n {
            if self.mul(0, a) != a || self.mul(a, 0) != a {
                return Err(Error::Internal(format!("identity law fails at {a}")));
            }
            let ia = self.inverse[a];
            if self.mul(a, ia) != 0 || self.mul(ia, a) != 0 {
                return Err(Error::Internal(format!("inverse law fails at {a}")));
            }
            let mut seen = vec![false; n];
            for b in 0..n {
                let c = self.mul(a, b);
                if seen[c] {
                    return Err(Error::Internal(format!("row {a} is not a bijection")));
                }
                seen[c] = true;
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(Error::Internal(format!(
                            "associativity fails at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        if self.closure(&self.generators).len() != n {
            return Err(Error::Internal("generators do not generate".into()));
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.product[a * self.order + b] as usize
    }

    #[inline]
    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// `g⁻¹ h g`.
    #[inline]
    pub fn conjugate(&self, h: usize, g: usize) -> usize {
        self.mul(self.mul(self.inverse[g], h), g)
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        (0..k).fold(0, |acc, _| self.mul(acc, a))
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> usize {
        (0..self.order).fold(1, |acc, a| lcm(acc, self.element_order(a)))
    }

    pub fn commutes(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .all(|&a| self.generators.iter().all(|&b| self.commutes(a, b)))
    }

    /// Subgroup generated by `gens`, ascending.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order];
        seen[0] = true;
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for &s in gens {
                let y = self.mul(x, s);
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        (0..self.order).filter(|&x| seen[x]).collect()
    }
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// Which group to build.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    Cyclic(usize),
    /// Dihedral group of order `2n`.
    Dihedral(usize),
    Quaternion,
    Symmetric(usize),
    Alternating(usize),
    DirectProduct(Box<GroupSpec>, Box<GroupSpec>),
    /// Subgroup of `Sym(degree)` generated by the given images of `0..degree`.
    Permutations { degree: usize, generators: Vec<Vec<usize>> },
}

impl GroupSpec {
    pub fn direct_product(a: GroupSpec, b: GroupSpec) -> GroupSpec {
        GroupSpec::DirectProduct(Box::new(a), Box::new(b))
    }

    /// Order predicted from the family formula; `None` for generator input.
    pub fn expected_order(&self) -> Option<usize> {
        match self {
            GroupSpec::Cyclic(n) => Some(*n),
            GroupSpec::Dihedral(n) => Some(2 * n),
            GroupSpec::Quaternion => Some(8),
            GroupSpec::Symmetric(n) => Some((1..=*n).product()),
            GroupSpec::Alternating(n) => Some(((1..=*n).product::<usize>() / 2).max(1)),
            GroupSpec::DirectProduct(a, b) => Some(a.expected_order()? * b.expected_order()?),
            GroupSpec::Permutations { .. } => None,
        }
    }

    /// The permutation images of the generators, for permutation families.
    pub(crate) fn permutation_generators(&self) -> Option<(usize, Vec<Vec<usize>>)> {
        match self {
            GroupSpec::Symmetric(n) => {
                let n = *n;
                if n < 2 {
                    return Some((n.max(1), Vec::new()));
                }
                let mut t: Vec<usize> = (0..n).collect();
                t.swap(0, 1);
                let c: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
                Some((n, vec![t, c]))
            }
            GroupSpec::Alternating(n) => {
                let n = *n;
                let gens = (2..n)
                    .map(|k| {
                        let mut p: Vec<usize> = (0..n).collect();
                        // (0 1 k)
                        p[0] = 1;
                        p[1] = k;
                        p[k] = 0;
                        p
                    })
                    .collect();
                Some((n.max(1), gens))
            }
            GroupSpec::Permutations { degree, generators } => Some((*degree, generators.clone())),
            _ => None,
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "C{n}"),
            GroupSpec::Dihedral(n) => write!(f, "D{n}"),
            GroupSpec::Quaternion => write!(f, "Q8"),
            GroupSpec::Symmetric(n) => write!(f, "S{n}"),
            GroupSpec::Alternating(n) => write!(f, "A{n}"),
            GroupSpec::DirectProduct(a, b) => write!(f, "{a}x{b}"),
            GroupSpec::Permutations { generators, .. } => {
                write!(f, "<")?;
                for (i, g) in generators.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{}", cycle_notation(g))?;
                }
                write!(f, ">")
            }
        }
    }
}

/// Builds `spec` with the default order limit.
pub fn build_group(spec: &GroupSpec) -> Result<Arc<GroupTable>> {
    build_group_with_limit(spec, DEFAULT_ORDER_LIMIT)
}

pub fn build_group_with_limit(spec: &GroupSpec, limit: usize) -> Result<Arc<GroupTable>> {
    check_parameters(spec)?;
    if let Some(order) = spec.expected_order() {
        if order > limit {
            return Err(Error::OrderLimit { order, limit });
        }
    }
    build_unchecked(spec, limit).map(Arc::new)
}

fn check_parameters(spec: &GroupSpec) -> Result<()> {
    match spec {
        GroupSpec::Cyclic(0) => Err(Error::UnsupportedParameter("cyclic(0)".into())),
        GroupSpec::Dihedral(0) => Err(Error::UnsupportedParameter("dihedral(0)".into())),
        GroupSpec::Symmetric(n) if *n == 0 || *n > 6 => Err(Error::UnsupportedParameter(
            format!("symmetric({n}): degree must be in 1..=6"),
        )),
        GroupSpec::Alternating(n) if *n == 0 || *n > 6 => Err(Error::UnsupportedParameter(
            format!("alternating({n}): degree must be in 1..=6"),
        )),
        GroupSpec::DirectProduct(a, b) => {
            check_parameters(a)?;
            check_parameters(b)
        }
        GroupSpec::Permutations { degree, generators } => {
            if *degree == 0 || *degree > u8::MAX as usize {
                return Err(Error::InvalidPermutation(format!(
                    "degree {degree} out of range 1..=255"
                )));
            }
            for (i, p) in generators.iter().enumerate() {
                if p.len() != *degree {
                    return Err(Error::InvalidPermutation(format!(
                        "generator {i} has length {}, expected {degree}",
                        p.len()
                    )));
                }
                let mut seen = vec![false; *degree];
                for &x in p {
                    if x >= *degree || seen[x] {
                        return Err(Error::InvalidPermutation(format!(
                            "generator {i} is not a bijection on 0..{degree}"
                        )));
                    }
                    seen[x] = true;
                }
            }
            Ok(())
        }
        _ => Ok(()),
    }
}

fn power_label(base: &str, k: usize) -> String {
    match k {
        0 => String::new(),
        1 => base.to_string(),
        _ => format!("{base}^{k}"),
    }
}

fn build_unchecked(spec: &GroupSpec, limit: usize) -> Result<GroupTable> {
    match spec {
        GroupSpec::Cyclic(n) => {
            let n = *n;
            let product = (0..n * n).map(|ij| ((ij / n + ij % n) % n) as u32).collect();
            let labels = (0..n)
                .map(|i| if i == 0 { "e".into() } else { power_label("a", i) })
                .collect();
            let gens = if n > 1 { vec![1] } else { Vec::new() };
            GroupTable::from_product_unchecked(n, product, labels, gens)
        }
        GroupSpec::Dihedral(n) => {
            let n = *n;
            let order = 2 * n;
            // index = rotation + n * flip for r^rotation s^flip
            let decode = |x: usize| (x % n, x / n);
            let mut product = Vec::with_capacity(order * order);
            for x in 0..order {
                let (a, f) = decode(x);
                for y in 0..order {
                    let (b, g) = decode(y);
                    let rot = if f == 0 { (a + b) % n } else { (a + n - b) % n };
                    product.push((rot + n * ((f + g) % 2)) as u32);
                }
            }
            let labels = (0..order)
                .map(|x| {
                    let (a, f) = decode(x);
                    match (power_label("r", a), f) {
                        (r, 0) if r.is_empty() => "e".to_string(),
                        (r, 0) => r,
                        (r, _) if r.is_empty() => "s".to_string(),
                        (r, _) => format!("{r} s"),
                    }
                })
                .collect();
            GroupTable::from_product_unchecked(order, product, labels, vec![1 % n, n])
        }
        GroupSpec::Quaternion => {
            // a^x b^y with a^4 = 1, b^2 = a^2, b a = a^{-1} b; index x + 4y
            let mut product = Vec::with_capacity(64);
            for p in 0..8 {
                let (x, y) = (p % 4, p / 4);
                for q in 0..8 {
                    let (u, v) = (q % 4, q / 4);
                    let (rot, flips) = if y == 0 { (x + u, v) } else { (x + 4 - u, 1 + v) };
                    let (rot, flip) = if flips == 2 { (rot + 2, 0) } else { (rot, flips) };
                    product.push(((rot % 4) + 4 * flip) as u32);
                }
            }
            let labels = (0..8)
                .map(|p| {
                    let (x, y) = (p % 4, p / 4);
                    let s = format!("{}{}", power_label("a", x), if y == 1 { "b" } else { "" });
                    if s.is_empty() {
                        "e".into()
                    } else {
                        s
                    }
                })
                .collect();
            GroupTable::from_product_unchecked(8, product, labels, vec![1, 4])
        }
        GroupSpec::DirectProduct(a, b) => {
            let ga = build_unchecked(a, limit)?;
            let gb = build_unchecked(b, limit)?;
            let (na, nb) = (ga.order, gb.order);
            let order = na * nb;
            if order > limit {
                return Err(Error::OrderLimit { order, limit });
            }
            let mut product = Vec::with_capacity(order * order);
            for x in 0..order {
                for y in 0..order {
                    let l = ga.mul(x / nb, y / nb);
                    let r = gb.mul(x % nb, y % nb);
                    product.push((l * nb + r) as u32);
                }
            }
            let labels = (0..order)
                .map(|x| format!("({},{})", ga.labels[x / nb], gb.labels[x % nb]))
                .collect();
            let gens = ga
                .generators
                .iter()
                .map(|&g| g * nb)
                .chain(gb.generators.iter().copied())
                .collect();
            GroupTable::from_product_unchecked(order, product, labels, gens)
        }
        GroupSpec::Symmetric(_) | GroupSpec::Alternating(_) | GroupSpec::Permutations { .. } => {
            let (degree, gens) = spec
                .permutation_generators()
                .expect("permutation family has generators");
            permutation_group(degree, &gens, limit)
        }
    }
}

/// Cycle notation on `0..n`, `()` for the identity.
pub fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut x = p[start];
        while x != start {
            seen[x] = true;
            cycle.push(x);
            x = p[x];
        }
        let body: Vec<String> = cycle.iter().map(|c| c.to_string()).collect();
        out.push_str(&format!("({})", body.join(" ")));
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

/// Breadth-first closure of permutation generators; elements are numbered
/// in discovery order, so the labeling is deterministic.
fn permutation_group(degree: usize, gens: &[Vec<usize>], limit: usize) -> Result<GroupTable> {
    // (p * q)(i) = p(q(i))
    let compose = |p: &[u8], q: &[u8]| -> Vec<u8> { q.iter().map(|&i| p[i as usize]).collect() };
    let gens: Vec<Vec<u8>> = gens
        .iter()
        .map(|g| g.iter().map(|&x| x as u8).collect())
        .collect();
    let identity: Vec<u8> = (0..degree as u8).collect();
    let mut elements = vec![identity.clone()];
    let mut index: HashMap<Vec<u8>, usize> = HashMap::from([(identity, 0)]);
    let mut head = 0;
    while head < elements.len() {
        for s in &gens {
            let y = compose(&elements[head], s);
            if !index.contains_key(&y) {
                index.insert(y.clone(), elements.len());
                elements.push(y);
                if elements.len() > limit {
                    return Err(Error::OrderLimit {
                        order: elements.len(),
                        limit,
                    });
                }
            }
        }
        head += 1;
    }
    let n = elements.len();
    let mut product = Vec::with_capacity(n * n);
    for p in &elements {
        for q in &elements {
            product.push(index[&compose(p, q)] as u32);
        }
    }
    let labels = elements
        .iter()
        .map(|p| cycle_notation(&p.iter().map(|&x| x as usize).collect::<Vec<_>>()))
        .collect();
    let gen_indices = gens.iter().map(|s| index[s]).collect();
    GroupTable::from_product_unchecked(n, product, labels, gen_indices)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_group() {
        let g = build_group(&GroupSpec::Cyclic(1)).unwrap();
        assert_eq!(g.order(), 1);
        g.validate().unwrap();
        assert_eq!(g.exponent(), 1);
    }

    #[test]
    fn cyclic_four_is_addition_mod_four() {
        let g = build_group(&GroupSpec::Cyclic(4)).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(g.mul(i, j), (i + j) % 4);
            }
        }
        assert_eq!(g.label(3), "a^3");
    }

    #[test]
    fn families_satisfy_axioms() {
        let specs = [
            GroupSpec::Dihedral(1),
            GroupSpec::Dihedral(2),
            GroupSpec::Dihedral(5),
            GroupSpec::Quaternion,
            GroupSpec::Symmetric(1),
            GroupSpec::Symmetric(2),
            GroupSpec::Symmetric(4),
            GroupSpec::Alternating(2),
            GroupSpec::Alternating(4),
            GroupSpec::direct_product(GroupSpec::Cyclic(2), GroupSpec::Dihedral(3)),
        ];
        for spec in &specs {
            let g = build_group(spec).unwrap();
            assert_eq!(Some(g.order()), spec.expected_order(), "{spec}");
            g.validate().unwrap();
        }
    }

    #[test]
    fn quaternion_relations() {
        let g = build_group(&GroupSpec::Quaternion).unwrap();
        let (a, b) = (1, 4);
        assert_eq!(g.element_order(a), 4);
        assert_eq!(g.element_order(b), 4);
        assert_eq!(g.mul(b, b), g.mul(a, a));
        assert_eq!(g.conjugate(a, b), g.inverse(a));
        // one involution
        assert_eq!((0..8).filter(|&x| g.element_order(x) == 2).count(), 1);
    }

    #[test]
    fn permutation_generators_give_s3() {
        let spec = GroupSpec::Permutations {
            degree: 3,
            generators: vec![vec![1, 0, 2], vec![1, 2, 0]],
        };
        let g = build_group(&spec).unwrap();
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
        g.validate().unwrap();
        assert_eq!(g.label(0), "()");
    }

    #[test]
    fn invalid_inputs_are_rejected() {
        let bad = GroupSpec::Permutations {
            degree: 3,
            generators: vec![vec![0, 0, 2]],
        };
        assert!(matches!(build_group(&bad), Err(Error::InvalidPermutation(_))));
        let short = GroupSpec::Permutations {
            degree: 3,
            generators: vec![vec![1, 0]],
        };
        assert!(matches!(build_group(&short), Err(Error::InvalidPermutation(_))));
        assert!(matches!(
            build_group(&GroupSpec::Symmetric(7)),
            Err(Error::UnsupportedParameter(_))
        ));
        assert!(matches!(
            build_group(&GroupSpec::Cyclic(0)),
            Err(Error::UnsupportedParameter(_))
        ));
        assert_eq!(
            build_group(&GroupSpec::Cyclic(2000)).unwrap_err(),
            Error::OrderLimit {
                order: 2000,
                limit: 1024
            }
        );
        let big = GroupSpec::Permutations {
            degree: 6,
            generators: vec![vec![1, 0, 2, 3, 4, 5], vec![1, 2, 3, 4, 5, 0]],
        };
        assert!(matches!(
            build_group_with_limit(&big, 100),
            Err(Error::OrderLimit { limit: 100, .. })
        ));
    }

    #[test]
    fn building_is_deterministic() {
        let spec = GroupSpec::Symmetric(4);
        assert_eq!(*build_group(&spec).unwrap(), *build_group(&spec).unwrap());
    }

    #[test]
    fn cycle_notation_examples() {
        assert_eq!(cycle_notation(&[0, 1, 2]), "()");
        assert_eq!(cycle_notation(&[1, 2, 0, 4, 3]), "(0 1 2)(3 4)");
    }
}
