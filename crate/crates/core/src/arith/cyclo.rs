//! Arithmetic in the cyclotomic field ℚ(ζ_ℓ) = ℚ[x]/Φ_ℓ(x).
//!
//! Each field is built once per ℓ and cached for the lifetime of the process,
//! so scalars can carry a `&'static` handle and support operator overloading
//! without threading a context through every call.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Mutex, OnceLock};

use smallvec::SmallVec;

use super::rational::Q;

pub type Coeffs = SmallVec<[Q; 4]>;

pub struct CycloField {
    pub ell: u32,
    /// φ(ℓ), the dimension over ℚ.
    pub phi: usize,
    /// Monic Φ_ℓ, lowest degree first, length φ+1.
    pub modulus: Vec<Q>,
    /// x^k reduced mod Φ_ℓ for k in 0..2φ-1.
    reduce_table: Vec<Coeffs>,
    /// ζ^k for k in 0..ℓ.
    powers: Vec<Coeffs>,
}

// ---- dense univariate helpers over ℚ (lowest degree first) ----

fn trim(v: &mut Vec<Q>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn upoly_mul(a: &[Q], b: &[Q]) -> Vec<Q> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Q::ZERO; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    trim(&mut out);
    out
}

fn upoly_sub(a: &[Q], b: &[Q]) -> Vec<Q> {
    let mut out = vec![Q::ZERO; a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] = x.clone();
    }
    for (i, y) in b.iter().enumerate() {
        out[i] = &out[i] - y;
    }
    trim(&mut out);
    out
}

/// Quotient and remainder of `a` by nonzero `b`.
fn upoly_divrem(a: &[Q], b: &[Q]) -> (Vec<Q>, Vec<Q>) {
    let mut r: Vec<Q> = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lb_inv = b[db].inv();
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![Q::ZERO; r.len() - db];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let coef = &r[r.len() - 1] * &lb_inv;
        for (j, y) in b.iter().enumerate() {
            r[shift + j] = &r[shift + j] - &(&coef * y);
        }
        q[shift] = coef;
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

fn cyclotomic_poly(ell: u32) -> Vec<Q> {
    // Φ_ℓ = (x^ℓ - 1) / Π_{d | ℓ, d < ℓ} Φ_d
    let mut num = vec![Q::ZERO; ell as usize + 1];
    num[0] = Q::int(-1);
    num[ell as usize] = Q::ONE;
    for d in 1..ell {
        if ell.is_multiple_of(d) {
            let (q, r) = upoly_divrem(&num, &cyclotomic_poly(d));
            debug_assert!(r.is_empty());
            num = q;
        }
    }
    num
}

impl CycloField {
    fn build(ell: u32) -> CycloField {
        assert!(ell >= 1, "ℓ must be positive");
        let modulus = cyclotomic_poly(ell);
        let phi = modulus.len() - 1;
        let mut reduce_table = Vec::with_capacity(2 * phi);
        for k in 0..(2 * phi).max(1) {
            let mut mono = vec![Q::ZERO; k + 1];
            mono[k] = Q::ONE;
            let (_, r) = upoly_divrem(&mono, &modulus);
            reduce_table.push(pad(&r, phi));
        }
        let powers = (0..ell as usize)
            .map(|k| {
                let mut mono = vec![Q::ZERO; k + 1];
                mono[k] = Q::ONE;
                let (_, r) = upoly_divrem(&mono, &modulus);
                pad(&r, phi)
            })
            .collect();
        CycloField { ell, phi, modulus, reduce_table, powers }
    }

    /// The cached field for ℓ.
    pub fn get(ell: u32) -> &'static CycloField {
        static CACHE: OnceLock<Mutex<HashMap<u32, &'static CycloField>>> = OnceLock::new();
        let mut map = CACHE.get_or_init(|| Mutex::new(HashMap::new())).lock().unwrap();
        map.entry(ell).or_insert_with(|| Box::leak(Box::new(CycloField::build(ell))))
    }

    pub fn zero(&'static self) -> CycloScalar {
        CycloScalar { field: self, coeffs: pad(&[], self.phi) }
    }

    pub fn one(&'static self) -> CycloScalar {
        self.rational(Q::ONE)
    }

    pub fn rational(&'static self, q: Q) -> CycloScalar {
        let mut coeffs = pad(&[], self.phi);
        coeffs[0] = q;
        CycloScalar { field: self, coeffs }
    }

    pub fn int(&'static self, v: i64) -> CycloScalar {
        self.rational(Q::int(v))
    }

    /// ζ_ℓ^k for any integer k.
    pub fn zeta_pow(&'static self, k: i64) -> CycloScalar {
        let idx = k.rem_euclid(self.ell as i64) as usize;
        CycloScalar { field: self, coeffs: self.powers[idx].clone() }
    }

    /// Reduce an arbitrary-length coefficient vector (lowest degree first).
    pub fn from_coeffs(&'static self, raw: &[Q]) -> CycloScalar {
        let mut coeffs = pad(&[], self.phi);
        for (k, c) in raw.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if k < self.phi {
                coeffs[k] = &coeffs[k] + c;
            } else {
                let red = self.reduce_any(k);
                for (j, r) in red.iter().enumerate() {
                    coeffs[j] = &coeffs[j] + &(c * r);
                }
            }
        }
        CycloScalar { field: self, coeffs }
    }

    fn reduce_any(&self, k: usize) -> Coeffs {
        if k < self.reduce_table.len() {
            return self.reduce_table[k].clone();
        }
        self.powers[k % self.ell as usize].clone()
    }
}

impl PartialEq for CycloField {
    fn eq(&self, other: &Self) -> bool {
        self.ell == other.ell
    }
}
impl Eq for CycloField {}

impl fmt::Debug for CycloField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(zeta_{})", self.ell)
    }
}

fn pad(v: &[Q], phi: usize) -> Coeffs {
    let mut out: Coeffs = SmallVec::from_elem(Q::ZERO, phi);
    for (i, c) in v.iter().enumerate() {
        out[i] = c.clone();
    }
    out
}

/// An element of ℚ(ζ_ℓ) in the power basis 1, ζ, …, ζ^{φ(ℓ)-1}.
#[derive(Clone)]
pub struct CycloScalar {
    pub field: &'static CycloField,
    pub coeffs: Coeffs,
}

impl CycloScalar {
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Q::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Q::is_zero)
    }

    /// The rational value if this scalar lies in ℚ.
    pub fn as_rational(&self) -> Option<&Q> {
        if self.coeffs[1..].iter().all(Q::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    pub fn scale(&self, q: &Q) -> CycloScalar {
        CycloScalar { field: self.field, coeffs: self.coeffs.iter().map(|c| c * q).collect() }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against Φ_ℓ.
    pub fn inv(&self) -> CycloScalar {
        assert!(!self.is_zero(), "inverse of zero in cyclotomic field");
        if let Some(q) = self.as_rational() {
            return self.field.rational(q.inv());
        }
        let mut a: Vec<Q> = self.coeffs.to_vec();
        trim(&mut a);
        let mut r0 = self.field.modulus.clone();
        let mut r1 = a;
        let mut t0: Vec<Q> = Vec::new();
        let mut t1: Vec<Q> = vec![Q::ONE];
        while !(r1.len() == 1) {
            let (q, r) = upoly_divrem(&r0, &r1);
            let t2 = upoly_sub(&t0, &upoly_mul(&q, &t1));
            r0 = std::mem::replace(&mut r1, r);
            t0 = std::mem::replace(&mut t1, t2);
            debug_assert!(!r1.is_empty(), "Φ_ℓ is irreducible, so the gcd is a unit");
        }
        let c = r1[0].inv();
        let t: Vec<Q> = t1.iter().map(|x| x * &c).collect();
        self.field.from_coeffs(&t)
    }

    pub fn pow(&self, mut e: u32) -> CycloScalar {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    fn check_field(&self, other: &CycloScalar) {
        assert_eq!(self.field.ell, other.field.ell, "mixing cyclotomic fields");
    }
}

impl PartialEq for CycloScalar {
    fn eq(&self, other: &Self) -> bool {
        self.field.ell == other.field.ell && self.coeffs == other.coeffs
    }
}
impl Eq for CycloScalar {}

impl<'a> Add<&'a CycloScalar> for &'a CycloScalar {
    type Output = CycloScalar;
    fn add(self, rhs: &CycloScalar) -> CycloScalar {
        self.check_field(rhs);
        CycloScalar {
            field: self.field,
            coeffs: self.coeffs.iter().zip(rhs.coeffs.iter()).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a CycloScalar> for &'a CycloScalar {
    type Output = CycloScalar;
    fn sub(self, rhs: &CycloScalar) -> CycloScalar {
        self.check_field(rhs);
        CycloScalar {
            field: self.field,
            coeffs: self.coeffs.iter().zip(rhs.coeffs.iter()).map(|(a, b)| a - b).collect(),
        }
    }
}

impl<'a> Mul<&'a CycloScalar> for &'a CycloScalar {
    type Output = CycloScalar;
    fn mul(self, rhs: &CycloScalar) -> CycloScalar {
        self.check_field(rhs);
        let phi = self.field.phi;
        if phi == 1 {
            let mut coeffs = self.coeffs.clone();
            coeffs[0] = &self.coeffs[0] * &rhs.coeffs[0];
            return CycloScalar { field: self.field, coeffs };
        }
        let mut wide = vec![Q::ZERO; 2 * phi - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    wide[i + j] = &wide[i + j] + &(a * b);
                }
            }
        }
        let mut coeffs = pad(&wide[..phi], phi);
        for (k, c) in wide.iter().enumerate().skip(phi) {
            if c.is_zero() {
                continue;
            }
            for (j, r) in self.field.reduce_table[k].iter().enumerate() {
                if !r.is_zero() {
                    coeffs[j] = &coeffs[j] + &(c * r);
                }
            }
        }
        CycloScalar { field: self.field, coeffs }
    }
}

impl Neg for &CycloScalar {
    type Output = CycloScalar;
    fn neg(self) -> CycloScalar {
        CycloScalar { field: self.field, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl fmt::Display for CycloScalar {
    /// Prints as a polynomial in `z` (ζ_ℓ), e.g. `1/2 - z`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.as_rational() {
            return write!(f, "{q}");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            match (k, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (_, true) => write!(f, "z")?,
                (_, false) => write!(f, "{a}*z")?,
            }
            if k > 1 {
                write!(f, "^{k}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CycloScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Rank of a matrix over the field, by Gauss-Jordan elimination.
pub fn rank(mut m: Vec<Vec<CycloScalar>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, piv);
        let inv = m[r][c].inv();
        let pivot = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let factor = &row[c] * &inv;
                for (entry, pv) in row[c..].iter_mut().zip(&pivot[c..]) {
                    *entry = &*entry - &(&factor * pv);
                }
            }
        }
        r += 1;
    }
    r
}
