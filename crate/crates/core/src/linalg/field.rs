//! Finite fields `F_q`, `q = p^e`, as polynomial residues over `F_p`.
//!
//! An element is stored as the integer `c_0 + c_1 p + ... + c_{e-1} p^{e-1}`
//! where `c_0 + c_1 t + ... + c_{e-1} t^{e-1}` is its residue modulo the
//! defining polynomial. Prime fields use plain modular arithmetic; extension
//! fields multiply through discrete log tables built from a primitive element.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest field order supported by the table-driven arithmetic.
pub const MAX_ORDER: u32 = 1 << 16;

/// Conway polynomials (low-to-high, monic) for `p ∈ {2,3,5,7}`, `e ≤ 4`.
const CONWAY: &[(u32, u32, &[u32])] = &[
    (2, 1, &[1, 1]),
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (2, 4, &[1, 1, 0, 0, 1]),
    (3, 1, &[1, 1]),
    (3, 2, &[2, 2, 1]),
    (3, 3, &[1, 2, 0, 1]),
    (3, 4, &[2, 0, 0, 2, 1]),
    (5, 1, &[3, 1]),
    (5, 2, &[2, 4, 1]),
    (5, 3, &[3, 3, 0, 1]),
    (5, 4, &[2, 4, 4, 0, 1]),
    (7, 1, &[4, 1]),
    (7, 2, &[3, 6, 1]),
    (7, 3, &[4, 0, 6, 1]),
    (7, 4, &[3, 4, 5, 0, 1]),
];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("characteristic {0} is not prime")]
    NotPrime(u32),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field of order {p}^{e} exceeds the supported maximum {MAX_ORDER}")]
    TooLarge { p: u32, e: u32 },
    #[error("invalid modulus: {0}")]
    BadModulus(String),
    #[error("coefficient vector {0:?} does not describe an element of this field")]
    BadElement(Vec<u32>),
}

/// Description of a finite field: characteristic, degree and (optionally) the
/// defining polynomial, coefficients low-to-high.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u32,
    #[serde(default = "one_u32")]
    pub e: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u32>>,
}

fn one_u32() -> u32 {
    1
}

impl FieldSpec {
    pub fn prime(p: u32) -> Self {
        FieldSpec { p, e: 1, modulus: None }
    }

    pub fn extension(p: u32, e: u32) -> Self {
        FieldSpec { p, e, modulus: None }
    }

    /// Parses `p`, `p,e` (the command-line form) or a label `F_q`.
    pub fn parse(s: &str) -> Result<Self, String> {
        if let Some(q) = s.trim().strip_prefix("F_") {
            let q: u64 = q.parse().map_err(|e| format!("bad field label {s:?}: {e}"))?;
            let p = (2..=q).find(|d| q % d == 0).ok_or_else(|| format!("bad field order in {s:?}"))?;
            let mut e = 0;
            let mut r = q;
            while r % p == 0 {
                r /= p;
                e += 1;
            }
            if r != 1 {
                return Err(format!("{q} is not a prime power"));
            }
            return Ok(FieldSpec::extension(p as u32, e));
        }
        let mut parts = s.split(',').map(str::trim);
        let p = parts
            .next()
            .ok_or_else(|| format!("empty field spec {s:?}"))?
            .parse::<u32>()
            .map_err(|e| format!("bad characteristic in {s:?}: {e}"))?;
        let e = match parts.next() {
            Some(t) => t.parse::<u32>().map_err(|err| format!("bad degree in {s:?}: {err}"))?,
            None => 1,
        };
        if parts.next().is_some() {
            return Err(format!("field spec {s:?} has more than two components"));
        }
        Ok(FieldSpec::extension(p, e))
    }

    pub fn order(&self) -> u64 {
        (self.p as u64).pow(self.e)
    }
}

impl std::str::FromStr for FieldSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        FieldSpec::parse(s)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.e == 1 {
            write!(f, "F_{}", self.p)
        } else {
            write!(f, "F_{}", self.order())
        }
    }
}

/// An element of some [`Field`]; meaningful only together with its field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[repr(transparent)]
#[serde(transparent)]
pub struct FieldElem(pub(crate) u32);

impl FieldElem {
    pub const ZERO: FieldElem = FieldElem(0);
    pub const ONE: FieldElem = FieldElem(1);

    /// The integer encoding `Σ c_i p^i` of the element.
    pub fn index(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

struct Inner {
    p: u32,
    e: u32,
    q: u32,
    modulus: Vec<u32>,
    /// `exp[i] = g^i` for `i < 2(q-1)`; empty for prime fields.
    exp: Vec<u32>,
    log: Vec<u32>,
    add: Vec<u16>,
    neg: Vec<u32>,
    inv: Vec<u32>,
    primitive: u32,
}

/// A finite field. Cheap to clone (shared tables).
#[derive(Clone)]
pub struct Field(Arc<Inner>);

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Field({})", self.spec())
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.e == other.0.e && self.0.modulus == other.0.modulus)
    }
}

impl Eq for Field {}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

// Dense polynomials over F_p with small integer coefficients, used only to
// validate moduli and to build the tables.
mod raw {
    pub fn trim(mut a: Vec<u32>) -> Vec<u32> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    pub fn inv_mod(a: u32, p: u32) -> u32 {
        let mut r = 1u64;
        let mut b = a as u64 % p as u64;
        let mut k = p - 2;
        while k > 0 {
            if k & 1 == 1 {
                r = r * b % p as u64;
            }
            b = b * b % p as u64;
            k >>= 1;
        }
        r as u32
    }

    pub fn rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
        let mut a = trim(a.to_vec());
        let m = trim(m.to_vec());
        let dm = m.len() - 1;
        let lead_inv = inv_mod(m[dm], p) as u64;
        while a.len() > dm {
            let da = a.len() - 1;
            let c = a[da] as u64 * lead_inv % p as u64;
            for i in 0..=dm {
                let idx = da - dm + i;
                a[idx] = ((a[idx] as u64 + (p as u64 - c) * m[i] as u64) % p as u64) as u32;
            }
            a = trim(a);
        }
        a
    }

    pub fn mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
            }
        }
        trim(out.into_iter().map(|v| v as u32).collect())
    }

    pub fn mulmod(a: &[u32], b: &[u32], m: &[u32], p: u32) -> Vec<u32> {
        rem(&mul(a, b, p), m, p)
    }

    pub fn powmod(base: &[u32], mut k: u64, m: &[u32], p: u32) -> Vec<u32> {
        let mut r = vec![1u32];
        let mut b = rem(base, m, p);
        while k > 0 {
            if k & 1 == 1 {
                r = mulmod(&r, &b, m, p);
            }
            b = mulmod(&b, &b, m, p);
            k >>= 1;
        }
        rem(&r, m, p)
    }

    pub fn sub(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        let n = a.len().max(b.len());
        let mut out = vec![0u32; n];
        for (i, o) in out.iter_mut().enumerate() {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            *o = (x + p - y) % p;
        }
        trim(out)
    }

    pub fn gcd(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        let mut a = trim(a.to_vec());
        let mut b = trim(b.to_vec());
        while !b.is_empty() {
            let r = rem(&a, &b, p);
            a = b;
            b = r;
        }
        a
    }

    /// Rabin's irreducibility test for a monic `f` of degree `e` over F_p.
    pub fn is_irreducible(f: &[u32], p: u32) -> bool {
        let e = f.len() - 1;
        if e == 1 {
            return true;
        }
        let x = vec![0u32, 1];
        let frob = |k: usize| {
            let mut r = x.clone();
            for _ in 0..k {
                r = powmod(&r, p as u64, f, p);
            }
            r
        };
        if sub(&frob(e), &x, p) != Vec::<u32>::new() {
            return false;
        }
        let mut n = e;
        let mut r = 2;
        let mut primes = Vec::new();
        while n > 1 {
            if n % r == 0 {
                primes.push(r);
                while n % r == 0 {
                    n /= r;
                }
            }
            r += 1;
        }
        primes.into_iter().all(|r| {
            let g = gcd(&sub(&frob(e / r), &x, p), f, p);
            g.len() == 1
        })
    }
}

fn decode(mut v: u32, p: u32, e: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(e as usize);
    for _ in 0..e {
        out.push(v % p);
        v /= p;
    }
    out
}

fn encode(c: &[u32], p: u32) -> u32 {
    c.iter().rev().fold(0u32, |acc, &d| acc * p + d)
}

impl Field {
    /// Builds the field described by `spec`, validating primality and
    /// irreducibility of the modulus. Without an explicit modulus the bundled
    /// Conway table is used, falling back to the lexicographically first
    /// monic irreducible polynomial.
    pub fn new(spec: &FieldSpec) -> Result<Field, FieldError> {
        let (p, e) = (spec.p, spec.e);
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if e == 0 {
            return Err(FieldError::ZeroDegree);
        }
        if (p as u64).pow(e) > MAX_ORDER as u64 {
            return Err(FieldError::TooLarge { p, e });
        }
        let modulus = match &spec.modulus {
            Some(m) => {
                if m.len() != e as usize + 1 {
                    return Err(FieldError::BadModulus(format!(
                        "expected {} coefficients for degree {e}, got {}",
                        e + 1,
                        m.len()
                    )));
                }
                if m.iter().any(|&c| c >= p) {
                    return Err(FieldError::BadModulus(format!("coefficients must lie in 0..{p}")));
                }
                if m[e as usize] != 1 {
                    return Err(FieldError::BadModulus("modulus must be monic".into()));
                }
                if !raw::is_irreducible(m, p) {
                    return Err(FieldError::BadModulus(format!("{m:?} is reducible over F_{p}")));
                }
                m.clone()
            }
            None => default_modulus(p, e),
        };
        Ok(Field(Arc::new(build(p, e, modulus))))
    }

    pub fn prime(p: u32) -> Result<Field, FieldError> {
        Field::new(&FieldSpec::prime(p))
    }

    pub fn extension(p: u32, e: u32) -> Result<Field, FieldError> {
        Field::new(&FieldSpec::extension(p, e))
    }

    pub fn p(&self) -> u32 {
        self.0.p
    }

    pub fn e(&self) -> u32 {
        self.0.e
    }

    pub fn q(&self) -> u32 {
        self.0.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    /// The fully resolved specification, modulus included.
    pub fn spec(&self) -> FieldSpec {
        FieldSpec { p: self.0.p, e: self.0.e, modulus: Some(self.0.modulus.clone()) }
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem(0)
    }

    pub fn one(&self) -> FieldElem {
        FieldElem(1)
    }

    /// The primitive element used for the log tables.
    pub fn primitive(&self) -> FieldElem {
        FieldElem(self.0.primitive)
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElem> {
        (0..self.0.q).map(FieldElem)
    }

    pub fn from_int(&self, v: i64) -> FieldElem {
        FieldElem(v.rem_euclid(self.0.p as i64) as u32)
    }

    pub fn from_index(&self, idx: u32) -> Option<FieldElem> {
        (idx < self.0.q).then_some(FieldElem(idx))
    }

    pub fn from_coeffs(&self, c: &[u32]) -> Result<FieldElem, FieldError> {
        if c.len() > self.0.e as usize || c.iter().any(|&d| d >= self.0.p) {
            return Err(FieldError::BadElement(c.to_vec()));
        }
        Ok(FieldElem(encode(c, self.0.p)))
    }

    /// Coefficient vector (length `e`, low-to-high) of the residue polynomial.
    pub fn coeffs(&self, a: FieldElem) -> Vec<u32> {
        decode(a.0, self.0.p, self.0.e)
    }

    pub fn is_prime_subfield(&self, a: FieldElem) -> bool {
        a.0 < self.0.p
    }

    #[inline]
    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        let f = &*self.0;
        if f.e == 1 {
            let s = a.0 + b.0;
            FieldElem(if s >= f.p { s - f.p } else { s })
        } else if f.p == 2 {
            FieldElem(a.0 ^ b.0)
        } else if !f.add.is_empty() {
            FieldElem(f.add[(a.0 * f.q + b.0) as usize] as u32)
        } else {
            let (x, y) = (decode(a.0, f.p, f.e), decode(b.0, f.p, f.e));
            let s: Vec<u32> = x.iter().zip(&y).map(|(u, v)| (u + v) % f.p).collect();
            FieldElem(encode(&s, f.p))
        }
    }

    #[inline]
    pub fn neg(&self, a: FieldElem) -> FieldElem {
        FieldElem(self.0.neg[a.0 as usize])
    }

    #[inline]
    pub fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        let f = &*self.0;
        if a.0 == 0 || b.0 == 0 {
            return FieldElem(0);
        }
        if f.e == 1 {
            FieldElem(((a.0 as u64 * b.0 as u64) % f.p as u64) as u32)
        } else {
            FieldElem(f.exp[(f.log[a.0 as usize] + f.log[b.0 as usize]) as usize])
        }
    }

    pub fn inv(&self, a: FieldElem) -> Option<FieldElem> {
        (a.0 != 0).then(|| FieldElem(self.0.inv[a.0 as usize]))
    }

    pub fn div(&self, a: FieldElem, b: FieldElem) -> Option<FieldElem> {
        self.inv(b).map(|bi| self.mul(a, bi))
    }

    pub fn pow(&self, a: FieldElem, mut k: u64) -> FieldElem {
        let mut r = self.one();
        let mut b = a;
        while k > 0 {
            if k & 1 == 1 {
                r = self.mul(r, b);
            }
            b = self.mul(b, b);
            k >>= 1;
        }
        r
    }

    /// `y += c * x`, elementwise.
    pub fn axpy(&self, y: &mut [FieldElem], c: FieldElem, x: &[FieldElem]) {
        if c.0 == 0 {
            return;
        }
        let f = &*self.0;
        if f.e == 1 {
            let p = f.p as u64;
            let c = c.0 as u64;
            for (yi, xi) in y.iter_mut().zip(x) {
                if xi.0 != 0 {
                    yi.0 = ((yi.0 as u64 + c * xi.0 as u64) % p) as u32;
                }
            }
        } else if f.p == 2 {
            let lc = f.log[c.0 as usize];
            for (yi, xi) in y.iter_mut().zip(x) {
                if xi.0 != 0 {
                    yi.0 ^= f.exp[(lc + f.log[xi.0 as usize]) as usize];
                }
            }
        } else {
            for (yi, xi) in y.iter_mut().zip(x) {
                if xi.0 != 0 {
                    *yi = self.add(*yi, self.mul(c, *xi));
                }
            }
        }
    }

    pub fn scale(&self, x: &mut [FieldElem], c: FieldElem) {
        for xi in x.iter_mut() {
            *xi = self.mul(c, *xi);
        }
    }

    pub fn dot(&self, a: &[FieldElem], b: &[FieldElem]) -> FieldElem {
        a.iter().zip(b).fold(self.zero(), |acc, (&x, &y)| self.add(acc, self.mul(x, y)))
    }

    /// Human-readable element: an integer for prime fields, otherwise the
    /// residue polynomial in the generator `t`.
    pub fn display(&self, a: FieldElem) -> String {
        if self.0.e == 1 {
            return a.0.to_string();
        }
        let c = self.coeffs(a);
        let terms: Vec<String> = c
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &d)| d != 0)
            .map(|(i, &d)| match (i, d) {
                (0, d) => d.to_string(),
                (1, 1) => "t".into(),
                (1, d) => format!("{d}t"),
                (i, 1) => format!("t^{i}"),
                (i, d) => format!("{d}t^{i}"),
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }
}

fn default_modulus(p: u32, e: u32) -> Vec<u32> {
    if let Some((_, _, m)) = CONWAY.iter().find(|(pp, ee, _)| *pp == p && *ee == e) {
        return m.to_vec();
    }
    if e == 1 {
        return vec![0, 1];
    }
    // first monic irreducible in lexicographic order of the low coefficients
    let count = (p as u64).pow(e);
    (0..count)
        .map(|i| {
            let mut c = decode(i as u32, p, e);
            c.push(1);
            c
        })
        .find(|c| c[0] != 0 && raw::is_irreducible(c, p))
        .expect("an irreducible polynomial of every degree exists")
}

fn build(p: u32, e: u32, modulus: Vec<u32>) -> Inner {
    let q = p.pow(e);
    let neg: Vec<u32> = (0..q)
        .map(|v| {
            let c: Vec<u32> = decode(v, p, e).into_iter().map(|d| (p - d) % p).collect();
            encode(&c, p)
        })
        .collect();
    let (exp, log, inv, primitive) = if e == 1 {
        let inv = (0..q).map(|v| if v == 0 { 0 } else { raw::inv_mod(v, p) }).collect();
        let primitive = (1..p)
            .find(|&g| {
                let mut x = g as u64;
                let mut ord = 1;
                while x != 1 {
                    x = x * g as u64 % p as u64;
                    ord += 1;
                }
                ord == p - 1
            })
            .unwrap_or(1);
        (Vec::new(), Vec::new(), inv, primitive)
    } else {
        let mulv = |a: u32, b: u32| -> u32 { encode(&raw::mulmod(&decode(a, p, e), &decode(b, p, e), &modulus, p), p) };
        let primitive = (2..q)
            .find(|&g| {
                let mut x = g;
                let mut ord = 1;
                while x != 1 {
                    x = mulv(x, g);
                    ord += 1;
                    if ord > q {
                        return false;
                    }
                }
                ord == q - 1
            })
            .expect("multiplicative group of a finite field is cyclic");
        let n = (q - 1) as usize;
        let mut exp = vec![0u32; 2 * n];
        let mut log = vec![0u32; q as usize];
        let mut x = 1u32;
        for i in 0..n {
            exp[i] = x;
            log[x as usize] = i as u32;
            x = mulv(x, primitive);
        }
        for i in n..2 * n {
            exp[i] = exp[i - n];
        }
        let mut inv = vec![0u32; q as usize];
        for v in 1..q {
            let l = log[v as usize] as usize;
            inv[v as usize] = exp[(n - l) % n];
        }
        (exp, log, inv, primitive)
    };
    let add = if e > 1 && p != 2 && q <= 1024 {
        let mut t = vec![0u16; (q * q) as usize];
        for a in 0..q {
            let x = decode(a, p, e);
            for b in 0..q {
                let y = decode(b, p, e);
                let s: Vec<u32> = x.iter().zip(&y).map(|(u, v)| (u + v) % p).collect();
                t[(a * q + b) as usize] = encode(&s, p) as u16;
            }
        }
        t
    } else {
        Vec::new()
    };
    Inner { p, e, q, modulus, exp, log, add, neg, inv, primitive }
}

/// Checks a coefficient list (low-to-high) for irreducibility over F_p.
pub fn is_irreducible_over_prime(poly: &[u32], p: u32) -> bool {
    let f = raw::trim(poly.to_vec());
    if f.len() < 2 {
        return false;
    }
    let lead_inv = raw::inv_mod(f[f.len() - 1], p) as u64;
    let monic: Vec<u32> = f.iter().map(|&c| (c as u64 * lead_inv % p as u64) as u32).collect();
    raw::is_irreducible(&monic, p)
}

/// The bundled Conway-style moduli, for inspection and tests.
pub fn conway_table() -> impl Iterator<Item = (u32, u32, &'static [u32])> {
    CONWAY.iter().copied()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conway_entries_are_irreducible() {
        for (p, e, m) in conway_table() {
            assert_eq!(m.len() as u32, e + 1);
            assert!(is_irreducible_over_prime(m, p), "F_{p}^{e}: {m:?}");
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(Field::prime(4).unwrap_err(), FieldError::NotPrime(4));
        let reducible = FieldSpec { p: 2, e: 2, modulus: Some(vec![1, 0, 1]) };
        assert!(matches!(Field::new(&reducible), Err(FieldError::BadModulus(_))));
        assert!(matches!(Field::extension(2, 17), Err(FieldError::TooLarge { .. })));
    }

    #[test]
    fn f4_arithmetic() {
        let f = Field::extension(2, 2).unwrap();
        let t = f.from_coeffs(&[0, 1]).unwrap();
        // t^2 = t + 1 under x^2 + x + 1
        assert_eq!(f.mul(t, t), f.from_coeffs(&[1, 1]).unwrap());
        assert_eq!(f.pow(t, 3), f.one());
        assert_eq!(f.display(f.mul(t, t)), "t+1");
    }

    #[test]
    fn inverses_in_every_small_field() {
        for (p, e) in [(2, 1), (3, 1), (2, 3), (3, 2), (5, 2), (7, 1)] {
            let f = Field::extension(p, e).unwrap();
            for a in f.elements().skip(1) {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
                assert_eq!(f.add(a, f.neg(a)), f.zero());
            }
        }
    }

    #[test]
    fn parse_cli_form() {
        assert_eq!(FieldSpec::parse("3").unwrap(), FieldSpec::prime(3));
        assert_eq!(FieldSpec::parse("2,3").unwrap(), FieldSpec::extension(2, 3));
        assert!(FieldSpec::parse("x").is_err());
    }
}
