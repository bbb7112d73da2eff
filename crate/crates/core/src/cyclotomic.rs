//! Exact arithmetic in the cyclotomic field `Q(ζ_m)`.
//!
//! Elements are stored in the power basis `1, ζ, …, ζ^{φ(m)-1}` modulo the
//! m-th cyclotomic polynomial, with integer numerators over one common
//! positive denominator. The representation is canonical, so structural
//! equality is field equality.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use smallvec::{smallvec, SmallVec};

// Numerators live inline for the small degrees that dominate in practice.
type Num = SmallVec<[i64; 8]>;

/// The ambient data for one modulus: `Φ_m` and the reduced powers of `ζ_m`.
#[derive(Debug)]
pub struct CyclotomicField {
    modulus: u32,
    degree: usize,
    // Monic Φ_m, lowest degree first, length degree + 1.
    cyclo_poly: Vec<i64>,
    // ζ^k reduced, for 0 <= k < modulus.
    zeta_powers: Vec<Vec<i64>>,
}

fn poly_divide_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    // den is monic
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    if rem.len() < den.len() {
        return vec![0];
    }
    let mut quot = vec![0i64; rem.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd];
        quot[i] = c;
        if c != 0 {
            for (j, &d) in den.iter().enumerate() {
                rem[i + j] -= c * d;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

fn cyclotomic_polynomial(m: u32) -> Vec<i64> {
    // Φ_m = (x^m - 1) / Π_{d | m, d < m} Φ_d
    let m = m as usize;
    let mut p = vec![0i64; m + 1];
    p[0] = -1;
    p[m] = 1;
    for d in 1..m {
        if m % d == 0 {
            p = poly_divide_exact(&p, &cyclotomic_polynomial(d as u32));
        }
    }
    p
}

impl CyclotomicField {
    /// The shared field of modulus `m`. Fields are cached process-wide.
    pub fn get(m: u32) -> Arc<CyclotomicField> {
        assert!(m >= 1, "cyclotomic modulus must be positive");
        static CACHE: OnceLock<Mutex<HashMap<u32, Arc<CyclotomicField>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        let mut guard = cache.lock().expect("cyclotomic cache poisoned");
        guard
            .entry(m)
            .or_insert_with(|| Arc::new(CyclotomicField::build(m)))
            .clone()
    }

    fn build(m: u32) -> CyclotomicField {
        let cyclo_poly = cyclotomic_polynomial(m);
        let degree = cyclo_poly.len() - 1;
        let mut zeta_powers = Vec::with_capacity(m as usize);
        // ζ^0 = 1, then multiply by ζ and reduce the single overflow term.
        let mut cur = vec![0i64; degree];
        cur[0] = 1;
        for _ in 0..m {
            zeta_powers.push(cur.clone());
            let top = cur[degree - 1];
            let mut next = vec![0i64; degree];
            next[1..degree].copy_from_slice(&cur[..(degree - 1)]);
            if top != 0 {
                for j in 0..degree {
                    next[j] -= top * cyclo_poly[j];
                }
            }
            cur = next;
        }
        CyclotomicField {
            modulus: m,
            degree,
            cyclo_poly,
            zeta_powers,
        }
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// `φ(m)`, the dimension of the field over `Q`.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn cyclotomic_polynomial(&self) -> &[i64] {
        &self.cyclo_poly
    }

    /// Reduced power-basis numerators of the product of two numerator
    /// vectors, written into `out` without allocating for small degrees.
    pub(crate) fn mul_numerators(&self, a: &[i64], b: &[i64], out: &mut [i64]) {
        let d = self.degree;
        if d == 1 {
            out[0] = a[0] * b[0];
            return;
        }
        let mut prod: SmallVec<[i64; 32]> = smallvec![0; 2 * d - 1];
        mul_accumulate(a, b, &mut prod);
        self.reduce_in_place(&mut prod);
        out.copy_from_slice(&prod[..d]);
    }

    fn reduce(&self, poly: &mut [i64]) -> Num {
        let d = self.degree;
        self.reduce_in_place(poly);
        let mut out: Num = smallvec![0; d];
        let n = d.min(poly.len());
        out[..n].copy_from_slice(&poly[..n]);
        out
    }

    /// Reduces modulo `Φ_m`, leaving the remainder in the low `φ(m)` slots.
    fn reduce_in_place(&self, poly: &mut [i64]) {
        let d = self.degree;
        for top in (d..poly.len()).rev() {
            let c = poly[top];
            if c != 0 {
                for j in 0..=d {
                    poly[top - d + j] -= c * self.cyclo_poly[j];
                }
            }
        }
    }
}

/// An element of `Q(ζ_m)`.
#[derive(Clone)]
pub struct Cyclotomic {
    field: Arc<CyclotomicField>,
    num: Num,
    den: i64,
}

// prod[i + j] += a[i] b[j], visiting only non-zero terms; character values
// are often sparse in the power basis.
fn mul_accumulate(a: &[i64], b: &[i64], prod: &mut [i64]) {
    let support: SmallVec<[(usize, i64); 16]> = b
        .iter()
        .enumerate()
        .filter(|&(_, &y)| y != 0)
        .map(|(j, &y)| (j, y))
        .collect();
    for (i, &x) in a.iter().enumerate() {
        if x != 0 {
            for &(j, y) in &support {
                prod[i + j] += x * y;
            }
        }
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Cyclotomic {
    fn normalized(field: Arc<CyclotomicField>, mut num: Num, mut den: i64) -> Cyclotomic {
        debug_assert!(den != 0);
        if den < 0 {
            den = -den;
            num.iter_mut().for_each(|c| *c = -*c);
        }
        if den != 1 {
            let g = num.iter().fold(den, |acc, &c| gcd(acc, c));
            if g > 1 {
                den /= g;
                num.iter_mut().for_each(|c| *c /= g);
            }
        }
        Cyclotomic { field, num, den }
    }

    pub fn zero(field: &Arc<CyclotomicField>) -> Cyclotomic {
        Cyclotomic {
            field: field.clone(),
            num: smallvec![0; field.degree],
            den: 1,
        }
    }

    pub fn from_int(field: &Arc<CyclotomicField>, n: i64) -> Cyclotomic {
        let mut num: Num = smallvec![0; field.degree];
        num[0] = n;
        Cyclotomic {
            field: field.clone(),
            num,
            den: 1,
        }
    }

    pub fn one(field: &Arc<CyclotomicField>) -> Cyclotomic {
        Cyclotomic::from_int(field, 1)
    }

    /// `ζ_m^k` for any integer `k`.
    pub fn zeta_pow(field: &Arc<CyclotomicField>, k: i64) -> Cyclotomic {
        let m = field.modulus as i64;
        let idx = k.rem_euclid(m) as usize;
        Cyclotomic {
            field: field.clone(),
            num: Num::from_slice(&field.zeta_powers[idx]),
            den: 1,
        }
    }

    /// Builds `Σ c_k ζ^k` from an arbitrary-length exponent vector.
    pub fn from_exponent_coefficients(field: &Arc<CyclotomicField>, coeffs: &[i64]) -> Cyclotomic {
        let m = field.modulus as usize;
        let mut num: Num = smallvec![0; field.degree];
        for (k, &c) in coeffs.iter().enumerate() {
            if c != 0 {
                for (acc, &z) in num.iter_mut().zip(&field.zeta_powers[k % m]) {
                    *acc += c * z;
                }
            }
        }
        Cyclotomic {
            field: field.clone(),
            num,
            den: 1,
        }
    }

    /// Builds an element from power-basis numerators over a denominator.
    pub fn from_parts(field: &Arc<CyclotomicField>, num: Vec<i64>, den: i64) -> Option<Cyclotomic> {
        if num.len() != field.degree || den == 0 {
            return None;
        }
        Some(Cyclotomic::normalized(field.clone(), Num::from_vec(num), den))
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn modulus(&self) -> u32 {
        self.field.modulus
    }

    /// Power-basis numerators.
    pub fn coefficients(&self) -> &[i64] {
        &self.num
    }

    pub fn denominator(&self) -> i64 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(|&c| c == 0)
    }

    /// `Some((p, q))` when the element is the rational `p/q`.
    pub fn as_rational(&self) -> Option<(i64, i64)> {
        if self.num[1..].iter().all(|&c| c == 0) {
            Some((self.num[0], self.den))
        } else {
            None
        }
    }

    pub fn as_integer(&self) -> Option<i64> {
        match self.as_rational() {
            Some((p, 1)) => Some(p),
            _ => None,
        }
    }

    fn check_same_field(&self, other: &Cyclotomic) {
        assert_eq!(
            self.field.modulus, other.field.modulus,
            "cyclotomic moduli differ"
        );
    }

    /// Complex conjugation, the Galois automorphism `ζ ↦ ζ^{-1}`.
    pub fn conj(&self) -> Cyclotomic {
        self.galois(-1)
    }

    /// The Galois automorphism `ζ ↦ ζ^k`, `k` coprime to the modulus.
    pub fn galois(&self, k: i64) -> Cyclotomic {
        let m = self.field.modulus as i64;
        let mut num: Num = smallvec![0; self.field.degree];
        for (t, &c) in self.num.iter().enumerate() {
            if c != 0 {
                let idx = (k * t as i64).rem_euclid(m) as usize;
                for (acc, &z) in num.iter_mut().zip(&self.field.zeta_powers[idx]) {
                    *acc += c * z;
                }
            }
        }
        Cyclotomic {
            field: self.field.clone(),
            num,
            den: self.den,
        }
    }

    pub fn scale(&self, k: i64) -> Cyclotomic {
        let num = self.num.iter().map(|&c| c * k).collect();
        Cyclotomic::normalized(self.field.clone(), num, self.den)
    }

    pub fn div_int(&self, k: i64) -> Cyclotomic {
        assert!(k != 0, "division by zero");
        Cyclotomic::normalized(self.field.clone(), self.num.clone(), self.den * k)
    }

    /// Image in `Q(ζ_M)` under `ζ_m ↦ ζ_M^{M/m}`; `None` unless `m | M`.
    pub fn embed(&self, target: &Arc<CyclotomicField>) -> Option<Cyclotomic> {
        let m = self.field.modulus;
        if target.modulus % m != 0 {
            return None;
        }
        let step = (target.modulus / m) as usize;
        let mut coeffs = vec![0i64; self.num.len() * step];
        for (t, &c) in self.num.iter().enumerate() {
            coeffs[t * step] = c;
        }
        let mut img = Cyclotomic::from_exponent_coefficients(target, &coeffs);
        img.den = self.den;
        Some(Cyclotomic::normalized(img.field, img.num, img.den))
    }

    /// Numerical value with `ζ = exp(2πi/m)`.
    pub fn to_complex(&self) -> (f64, f64) {
        let m = self.field.modulus as f64;
        let (mut re, mut im) = (0.0, 0.0);
        for (t, &c) in self.num.iter().enumerate() {
            let a = 2.0 * std::f64::consts::PI * t as f64 / m;
            re += c as f64 * a.cos();
            im += c as f64 * a.sin();
        }
        (re / self.den as f64, im / self.den as f64)
    }
}

/// `Σ_j w_j · a_j · conj(b_j)`, exactly. Integral inputs are accumulated
/// in the exponent basis of `ζ` and reduced once at the end.
pub fn weighted_conj_dot(
    field: &Arc<CyclotomicField>,
    weights: &[i64],
    a: &[Cyclotomic],
    b: &[Cyclotomic],
) -> Cyclotomic {
    assert!(
        a.len() == weights.len() && b.len() == weights.len(),
        "weighted dot of mismatched lengths"
    );
    if a.iter().chain(b).any(|x| x.den != 1 || x.field.modulus != field.modulus) {
        return weights
            .iter()
            .zip(a.iter().zip(b))
            .fold(Cyclotomic::zero(field), |acc, (&w, (x, y))| {
                &acc + &(x * &y.conj()).scale(w)
            });
    }
    let m = field.modulus as usize;
    let mut acc = vec![0i64; m];
    for (&w, (x, y)) in weights.iter().zip(a.iter().zip(b)) {
        if w == 0 {
            continue;
        }
        for (s, &xs) in x.num.iter().enumerate() {
            if xs == 0 {
                continue;
            }
            let wx = w * xs;
            for (t, &yt) in y.num.iter().enumerate() {
                if yt != 0 {
                    acc[(s + m - t) % m] += wx * yt;
                }
            }
        }
    }
    Cyclotomic::from_exponent_coefficients(field, &acc)
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        self.field.modulus == other.field.modulus && self.den == other.den && self.num == other.num
    }
}

impl Eq for Cyclotomic {}

impl std::hash::Hash for Cyclotomic {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.field.modulus.hash(state);
        self.num.hash(state);
        self.den.hash(state);
    }
}

impl PartialOrd for Cyclotomic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on `(modulus, numerators, denominator)`; a total order used
/// only for canonical sorting.
impl Ord for Cyclotomic {
    fn cmp(&self, other: &Self) -> Ordering {
        self.field
            .modulus
            .cmp(&other.field.modulus)
            .then_with(|| self.num.cmp(&other.num))
            .then_with(|| self.den.cmp(&other.den))
    }
}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.check_same_field(rhs);
        if self.den == rhs.den {
            let num = self.num.iter().zip(&rhs.num).map(|(a, b)| a + b).collect();
            return Cyclotomic::normalized(self.field.clone(), num, self.den);
        }
        let num = self
            .num
            .iter()
            .zip(&rhs.num)
            .map(|(a, b)| a * rhs.den + b * self.den)
            .collect();
        Cyclotomic::normalized(self.field.clone(), num, self.den * rhs.den)
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self + &(-rhs)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            field: self.field.clone(),
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den,
        }
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.check_same_field(rhs);
        let d = self.field.degree;
        let mut prod: SmallVec<[i64; 16]> = smallvec![0; 2 * d - 1];
        mul_accumulate(&self.num, &rhs.num, &mut prod);
        let num = self.field.reduce(&mut prod);
        Cyclotomic::normalized(self.field.clone(), num, self.den * rhs.den)
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic[{}]({})", self.field.modulus, self)
    }
}

/// Renders as a polynomial in `z = ζ_m`, e.g. `-1 - z`.
impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (t, &c) in self.num.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mag = c.unsigned_abs();
            if out.is_empty() {
                if c < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(if c < 0 { " - " } else { " + " });
            }
            match (t, mag) {
                (0, _) => out.push_str(&mag.to_string()),
                (_, 1) => {}
                _ => out.push_str(&mag.to_string()),
            }
            match t {
                0 => {}
                1 => out.push('z'),
                _ => out.push_str(&format!("z^{t}")),
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        if self.den != 1 {
            write!(f, "({out})/{}", self.den)
        } else {
            f.write_str(&out)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(CyclotomicField::get(15).degree(), 8);
    }

    #[test]
    fn roots_of_unity_sum_to_zero() {
        for m in [2u32, 3, 4, 5, 6, 8, 9, 12, 15] {
            let f = CyclotomicField::get(m);
            let mut s = Cyclotomic::zero(&f);
            for k in 0..m as i64 {
                s = &s + &Cyclotomic::zeta_pow(&f, k);
            }
            assert!(s.is_zero(), "m = {m}");
            let z = Cyclotomic::zeta_pow(&f, 1);
            let mut p = Cyclotomic::one(&f);
            for _ in 0..m {
                p = &p * &z;
            }
            assert_eq!(p, Cyclotomic::one(&f));
        }
    }

    #[test]
    fn conjugation_and_norm() {
        let f = CyclotomicField::get(3);
        let w = Cyclotomic::zeta_pow(&f, 1);
        assert_eq!(w.conj(), Cyclotomic::zeta_pow(&f, 2));
        assert_eq!((&w * &w.conj()).as_integer(), Some(1));
        // |1 + ω|^2 = 1
        let x = &Cyclotomic::one(&f) + &w;
        assert_eq!((&x * &x.conj()).as_integer(), Some(1));
    }

    #[test]
    fn rationals_normalize() {
        let f = CyclotomicField::get(4);
        let a = Cyclotomic::from_int(&f, 6).div_int(4);
        assert_eq!(a.as_rational(), Some((3, 2)));
        let b = Cyclotomic::from_int(&f, -1).div_int(-2);
        assert_eq!(b.as_rational(), Some((1, 2)));
        assert_eq!((&a + &b).as_integer(), Some(2));
    }

    #[test]
    fn embedding_respects_roots() {
        let f3 = CyclotomicField::get(3);
        let f12 = CyclotomicField::get(12);
        let w = Cyclotomic::zeta_pow(&f3, 2);
        assert_eq!(w.embed(&f12).unwrap(), Cyclotomic::zeta_pow(&f12, 8));
        assert!(w.embed(&CyclotomicField::get(4)).is_none());
    }

    #[test]
    fn display() {
        let f = CyclotomicField::get(3);
        assert_eq!(Cyclotomic::zeta_pow(&f, 2).to_string(), "-1 - z");
        assert_eq!(Cyclotomic::zero(&f).to_string(), "0");
        assert_eq!(Cyclotomic::from_int(&f, 1).div_int(2).to_string(), "(1)/2");
    }

    #[test]
    fn complex_value() {
        let f = CyclotomicField::get(4);
        let (re, im) = Cyclotomic::zeta_pow(&f, 1).to_complex();
        assert!(re.abs() < 1e-12 && (im - 1.0).abs() < 1e-12);
    }
}
