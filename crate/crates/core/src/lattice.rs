//! Integer lattices given by spanning vectors.

/// Row-style Hermite normal form of the integer span of `rows`.
///
/// The result is the unique echelon basis with positive pivots in which
/// every entry above a pivot lies in `[0, pivot)`. Two families span the
/// same lattice iff their normal forms are equal.
pub fn hermite_normal_form(rows: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| {
            assert_eq!(r.len(), ncols, "ragged lattice generators");
            r.iter().map(|&x| x as i128).collect()
        })
        .collect();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        // Euclid on column c among rows r..
        loop {
            let Some(p) = (r..m.len())
                .filter(|&i| m[i][c] != 0)
                .min_by_key(|&i| m[i][c].abs())
            else {
                break;
            };
            m.swap(r, p);
            let mut done = true;
            for i in (r + 1)..m.len() {
                if m[i][c] != 0 {
                    let q = m[i][c].div_euclid(m[r][c]);
                    for j in c..ncols {
                        let t = m[r][j];
                        m[i][j] -= q * t;
                    }
                    if m[i][c] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if m[r][c] == 0 {
            continue;
        }
        if m[r][c] < 0 {
            m[r].iter_mut().for_each(|x| *x = -*x);
        }
        let pivot = m[r][c];
        for i in 0..r {
            let q = m[i][c].div_euclid(pivot);
            if q != 0 {
                for j in c..ncols {
                    let t = m[r][j];
                    m[i][j] -= q * t;
                }
            }
        }
        r += 1;
    }
    m.truncate(r);
    m.into_iter()
        .map(|row| {
            row.into_iter()
                .map(|x| i64::try_from(x).expect("lattice entry overflow"))
                .collect()
        })
        .collect()
}

pub fn lattice_rank(rows: &[Vec<i64>]) -> usize {
    hermite_normal_form(rows).len()
}

/// No non-trivial integer relation among `rows`.
pub fn integrally_independent(rows: &[Vec<i64>]) -> bool {
    lattice_rank(rows) == rows.len()
}

pub fn same_span(a: &[Vec<i64>], b: &[Vec<i64>]) -> bool {
    hermite_normal_form(a) == hermite_normal_form(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_examples() {
        assert_eq!(hermite_normal_form(&[vec![2, 4], vec![3, 5]]), vec![vec![1, 1], vec![0, 2]]);
        assert_eq!(hermite_normal_form(&[vec![1, -1], vec![-1, 1]]), vec![vec![1, -1]]);
        assert!(hermite_normal_form(&[vec![0, 0]]).is_empty());
        assert!(!integrally_independent(&[vec![1, 2], vec![2, 4]]));
        assert!(same_span(&[vec![1, 0], vec![0, 1]], &[vec![1, 1], vec![1, 2]]));
        assert!(!same_span(&[vec![2, 0]], &[vec![1, 0]]));
    }

    proptest! {
        #[test]
        fn unimodular_changes_preserve_the_form(
            rows in prop::collection::vec(prop::collection::vec(-6i64..6, 4), 1..5),
            k in -3i64..3,
            i in 0usize..5,
            j in 0usize..5,
        ) {
            let n = rows.len();
            let (i, j) = (i % n, j % n);
            let mut other = rows.clone();
            if i != j {
                for c in 0..4 {
                    other[i][c] += k * rows[j][c];
                }
            }
            other.reverse();
            prop_assert_eq!(hermite_normal_form(&rows), hermite_normal_form(&other));
        }

        #[test]
        fn form_spans_the_generators(rows in prop::collection::vec(prop::collection::vec(-6i64..6, 3), 1..5)) {
            let h = hermite_normal_form(&rows);
            let mut extended = h.clone();
            extended.extend(rows.iter().cloned());
            prop_assert_eq!(hermite_normal_form(&extended), h);
        }
    }
}
