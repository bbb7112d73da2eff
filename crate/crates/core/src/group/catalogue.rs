use super::GroupSpec;

/// A built-in group with a short display label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogueEntry {
    pub label: String,
    pub spec: GroupSpec,
}

/// Invariant factor lists `n1 | n2 | … | nr` with `r >= 2`, `n1 >= 2` and
/// product at most `max_order`; these are the non-cyclic abelian groups.
pub fn abelian_invariant_factor_lists(max_order: usize) -> Vec<Vec<usize>> {
    fn extend(prefix: &mut Vec<usize>, product: usize, max_order: usize, out: &mut Vec<Vec<usize>>) {
        let last = *prefix.last().expect("non-empty prefix");
        let mut next = last;
        while product * next <= max_order {
            prefix.push(next);
            out.push(prefix.clone());
            extend(prefix, product * next, max_order, out);
            prefix.pop();
            next += last;
        }
    }
    let mut out = Vec::new();
    for first in 2..=max_order {
        extend(&mut vec![first], first, max_order, &mut out);
    }
    out.sort_by_key(|f| (f.iter().product::<usize>(), f.clone()));
    out
}

fn product_of_cyclics(factors: &[usize]) -> GroupSpec {
    let mut iter = factors.iter().rev();
    let mut spec = GroupSpec::Cyclic(*iter.next().expect("at least one factor"));
    for &n in iter {
        spec = GroupSpec::direct_product(GroupSpec::Cyclic(n), spec);
    }
    spec
}

/// Every built-in group of order at most `max_order`, sorted by order.
///
/// Families: cyclic, dihedral (`n >= 2`), `Q8`, symmetric and alternating
/// of degree at most 6, the non-cyclic abelian groups, and the non-abelian
/// groups `D_n`, `Q8`, `A4`, `S4` crossed with `C2` and `C3`.
pub fn catalogue(max_order: usize) -> Vec<CatalogueEntry> {
    let mut specs: Vec<GroupSpec> = Vec::new();
    specs.extend((1..=max_order).map(GroupSpec::Cyclic));
    specs.extend((2..=max_order / 2).map(GroupSpec::Dihedral));
    specs.push(GroupSpec::Quaternion);
    specs.extend((3..=6).map(GroupSpec::Symmetric));
    specs.extend((4..=6).map(GroupSpec::Alternating));
    specs.extend(
        abelian_invariant_factor_lists(max_order)
            .iter()
            .map(|f| product_of_cyclics(f)),
    );
    let mut bases: Vec<GroupSpec> = (3..=max_order / 4).map(GroupSpec::Dihedral).collect();
    bases.extend([
        GroupSpec::Quaternion,
        GroupSpec::Alternating(4),
        GroupSpec::Symmetric(4),
    ]);
    for base in bases {
        for k in [2, 3] {
            specs.push(GroupSpec::direct_product(base.clone(), GroupSpec::Cyclic(k)));
        }
    }
    let mut out: Vec<(usize, CatalogueEntry)> = specs
        .into_iter()
        .filter_map(|spec| {
            let order = spec.expected_order()?;
            (order <= max_order).then(|| {
                (
                    order,
                    CatalogueEntry {
                        label: spec.to_string(),
                        spec,
                    },
                )
            })
        })
        .collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out.into_iter().map(|(_, e)| e).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn abelian_counts() {
        // number of abelian groups of order n minus the cyclic one
        let lists = abelian_invariant_factor_lists(16);
        let count = |n: usize| lists.iter().filter(|f| f.iter().product::<usize>() == n).count();
        assert_eq!(count(4), 1);
        assert_eq!(count(8), 2);
        assert_eq!(count(9), 1);
        assert_eq!(count(12), 1);
        assert_eq!(count(16), 4);
        assert!(lists.iter().all(|f| f.windows(2).all(|w| w[1] % w[0] == 0)));
    }

    #[test]
    fn catalogue_is_sorted_and_bounded() {
        let cat = catalogue(24);
        let orders: Vec<usize> = cat.iter().map(|e| e.spec.expected_order().unwrap()).collect();
        assert!(orders.windows(2).all(|w| w[0] <= w[1]));
        assert!(orders.iter().all(|&n| n <= 24));
        assert!(cat.iter().any(|e| e.label == "S4"));
        assert!(cat.iter().any(|e| e.label == "Q8xC2"));
        assert!(cat.iter().any(|e| e.label == "C2xC2xC2"));
    }
}
