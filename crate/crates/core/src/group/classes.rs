use super::GroupTable;

/// Conjugacy classes in canonical order: by representative element order,
/// then class size, then representative index. The representative of a
/// class is its smallest element index, so the identity class comes first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClasses {
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
    representatives: Vec<usize>,
    class_sizes: Vec<usize>,
    rep_orders: Vec<usize>,
    inverse_class: Vec<usize>,
}

pub fn conjugacy_classes(g: &GroupTable) -> ConjugacyClasses {
    let n = g.order();
    let mut assigned = vec![false; n];
    let mut raw: Vec<Vec<usize>> = Vec::new();
    for x in 0..n {
        if assigned[x] {
            continue;
        }
        let mut members: Vec<usize> = (0..n).map(|y| g.conjugate(x, y)).collect();
        members.sort_unstable();
        members.dedup();
        for &m in &members {
            assigned[m] = true;
        }
        raw.push(members);
    }
    raw.sort_by_key(|c| (g.element_order(c[0]), c.len(), c[0]));

    let mut class_of = vec![0; n];
    for (i, c) in raw.iter().enumerate() {
        for &x in c {
            class_of[x] = i;
        }
    }
    let representatives: Vec<usize> = raw.iter().map(|c| c[0]).collect();
    let class_sizes = raw.iter().map(Vec::len).collect();
    let rep_orders = representatives.iter().map(|&r| g.element_order(r)).collect();
    let inverse_class = representatives
        .iter()
        .map(|&r| class_of[g.inverse(r)])
        .collect();
    ConjugacyClasses {
        classes: raw,
        class_of,
        representatives,
        class_sizes,
        rep_orders,
        inverse_class,
    }
}

impl ConjugacyClasses {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class(&self, i: usize) -> &[usize] {
        &self.classes[i]
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn representatives(&self) -> &[usize] {
        &self.representatives
    }

    pub fn representative(&self, i: usize) -> usize {
        self.representatives[i]
    }

    pub fn class_sizes(&self) -> &[usize] {
        &self.class_sizes
    }

    pub fn size(&self, i: usize) -> usize {
        self.class_sizes[i]
    }

    /// Order of the elements in class `i`.
    pub fn element_order(&self, i: usize) -> usize {
        self.rep_orders[i]
    }

    /// The class containing the inverses of class `i`.
    pub fn inverse_class(&self, i: usize) -> usize {
        self.inverse_class[i]
    }
}
