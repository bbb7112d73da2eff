//! Irreducible characters from the class-sum algebra.
//!
//! The central characters `ω_χ(C_j) = |C_j| χ(g_j) / χ(1)` are the common
//! left eigenvectors of the class multiplication matrices. They are found
//! modulo a prime `p ≡ 1 (mod m)` with `p > |G|`, where every eigenvalue
//! lies in `F_p`; degrees follow from the norm `Σ ω(C_j) ω(C_j⁻¹) / |C_j|`
//! and the values are lifted to `Z[ζ_m]` by the discrete Fourier transform
//! over the powers of each class representative.

use std::sync::Arc;

use crate::cyclotomic::{Cyclotomic, CyclotomicField};
use crate::error::{Error, Result};
use crate::group::{ConjugacyClasses, GroupTable};
use crate::modp::PrimeField;

/// `(degree, values per class)` for each irreducible, in discovery order.
pub(crate) fn irreducible_values(
    g: &GroupTable,
    classes: &ConjugacyClasses,
    field: &Arc<CyclotomicField>,
) -> Result<Vec<(usize, Vec<Cyclotomic>)>> {
    let n = g.order();
    let k = classes.len();
    let m = field.modulus() as u64;
    if (m as usize) % g.exponent() != 0 {
        return Err(Error::Internal(format!(
            "modulus {m} is not a multiple of the exponent {}",
            g.exponent()
        )));
    }
    let fp = PrimeField::splitting(m, n.max(2) as u64);

    let mut spaces: Vec<Vec<Vec<u64>>> = vec![(0..k)
        .map(|i| {
            let mut row = vec![0u64; k];
            row[i] = 1;
            row
        })
        .collect()];

    for i in 1..k {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let mat = class_matrix(g, classes, i, &fp);
        let mut next = Vec::with_capacity(spaces.len());
        for space in spaces {
            if space.len() == 1 {
                next.push(space);
                continue;
            }
            next.extend(split(&fp, space, &mat)?);
        }
        spaces = next;
    }
    if let Some(s) = spaces.iter().find(|s| s.len() != 1) {
        return Err(Error::Internal(format!(
            "class-sum eigenspace of dimension {} did not split",
            s.len()
        )));
    }
    if spaces.len() != k {
        return Err(Error::Internal("eigenspace count differs from class count".into()));
    }

    let z = fp.pow(fp.primitive_root(), (fp.p() - 1) / m);
    let mut out = Vec::with_capacity(k);
    for space in &spaces {
        let v = &space[0];
        if v[0] == 0 {
            return Err(Error::Internal("central character vanishes at the identity".into()));
        }
        let scale = fp.inv(v[0]);
        let omega: Vec<u64> = v.iter().map(|&x| fp.mul(x, scale)).collect();

        let mut norm = 0u64;
        for j in 0..k {
            let t = fp.mul(omega[j], omega[classes.inverse_class(j)]);
            norm = fp.add(norm, fp.mul(t, fp.inv(classes.size(j) as u64 % fp.p())));
        }
        if norm == 0 {
            return Err(Error::Internal("degenerate central character norm".into()));
        }
        let d2 = fp.mul(n as u64 % fp.p(), fp.inv(norm));
        let degree = (1..=n)
            .take_while(|d| d * d <= n)
            .find(|d| (d * d) as u64 == d2)
            .ok_or_else(|| Error::Internal("degree is not a square root of a divisor".into()))?;

        let chi_mod_p: Vec<u64> = (0..k)
            .map(|j| {
                let t = fp.mul(omega[j], degree as u64);
                fp.mul(t, fp.inv(classes.size(j) as u64 % fp.p()))
            })
            .collect();
        let values = (0..k)
            .map(|j| lift_value(g, classes, field, &fp, z, &chi_mod_p, j, degree))
            .collect::<Result<Vec<_>>>()?;
        out.push((degree, values));
    }
    Ok(out)
}

// mat[l][j] = #{x ∈ C_i : x⁻¹ z_l ∈ C_j}, the coefficient of C_l in C_i C_j.
fn class_matrix(g: &GroupTable, classes: &ConjugacyClasses, i: usize, fp: &PrimeField) -> Vec<Vec<u64>> {
    let k = classes.len();
    let mut mat = vec![vec![0u64; k]; k];
    for (l, row) in mat.iter_mut().enumerate() {
        let z = classes.representative(l);
        for &x in classes.class(i) {
            let y = g.mul(g.inverse(x), z);
            row[classes.class_of(y)] += 1;
        }
        for c in row.iter_mut() {
            *c %= fp.p();
        }
    }
    mat
}

// Splits the row space `basis` (in RREF) into left eigenspaces of `mat`.
fn split(fp: &PrimeField, basis: Vec<Vec<u64>>, mat: &[Vec<u64>]) -> Result<Vec<Vec<Vec<u64>>>> {
    let r = basis.len();
    let k = mat.len();
    let pivots: Vec<usize> = basis
        .iter()
        .map(|row| row.iter().position(|&x| x != 0).expect("non-zero basis row"))
        .collect();
    // restricted action: basis_t · mat = Σ_s a[t][s] basis_s
    let a: Vec<Vec<u64>> = basis
        .iter()
        .map(|row| {
            let mut img = vec![0u64; k];
            for (l, &c) in row.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                for j in 0..k {
                    img[j] = fp.add(img[j], fp.mul(c, mat[l][j]));
                }
            }
            pivots.iter().map(|&p| img[p]).collect()
        })
        .collect();
    let roots = fp.roots(&fp.charpoly(&a));
    if roots.len() <= 1 {
        if roots.is_empty() {
            return Err(Error::Internal("class matrix has no eigenvalue in F_p".into()));
        }
        return Ok(vec![basis]);
    }
    let mut pieces = Vec::with_capacity(roots.len());
    let mut total = 0;
    for lambda in roots {
        // left eigenvectors c (A - λ) = 0  <=>  (A - λ)^T c^T = 0
        let shifted_t: Vec<Vec<u64>> = (0..r)
            .map(|s| {
                (0..r)
                    .map(|t| {
                        let x = a[t][s];
                        if s == t {
                            fp.sub(x, lambda)
                        } else {
                            x
                        }
                    })
                    .collect()
            })
            .collect();
        let coords = fp.nullspace(&shifted_t);
        let mut rows: Vec<Vec<u64>> = coords
            .iter()
            .map(|c| {
                let mut v = vec![0u64; k];
                for (t, &ct) in c.iter().enumerate() {
                    if ct == 0 {
                        continue;
                    }
                    for j in 0..k {
                        v[j] = fp.add(v[j], fp.mul(ct, basis[t][j]));
                    }
                }
                v
            })
            .collect();
        fp.rref(&mut rows);
        total += rows.len();
        pieces.push(rows);
    }
    if total != r {
        return Err(Error::Internal("class matrix is not diagonalizable mod p".into()));
    }
    Ok(pieces)
}

#[allow(clippy::too_many_arguments)]
fn lift_value(
    g: &GroupTable,
    classes: &ConjugacyClasses,
    field: &Arc<CyclotomicField>,
    fp: &PrimeField,
    z: u64,
    chi: &[u64],
    j: usize,
    degree: usize,
) -> Result<Cyclotomic> {
    let m = field.modulus() as usize;
    let rep = classes.representative(j);
    let o = classes.element_order(j);
    let step = m / o;
    let zo = fp.pow(z, step as u64);
    let zo_inv = fp.inv(zo);
    let o_inv = fp.inv(o as u64 % fp.p());
    let mut power_classes = Vec::with_capacity(o);
    let mut x = 0usize;
    for _ in 0..o {
        power_classes.push(classes.class_of(x));
        x = g.mul(x, rep);
    }
    let mut exps = vec![0i64; m];
    for kk in 0..o {
        // multiplicity of ζ_o^kk among the eigenvalues of g
        let w = fp.pow(zo_inv, kk as u64);
        let mut acc = 0u64;
        let mut wk = 1u64;
        for &pc in &power_classes {
            acc = fp.add(acc, fp.mul(chi[pc], wk));
            wk = fp.mul(wk, w);
        }
        let mult = fp.mul(acc, o_inv);
        if mult as usize > degree {
            return Err(Error::Internal(format!(
                "eigenvalue multiplicity {mult} exceeds degree {degree}"
            )));
        }
        exps[kk * step] = mult as i64;
    }
    Ok(Cyclotomic::from_exponent_coefficients(field, &exps))
}
