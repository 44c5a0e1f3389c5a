//! Univariate polynomials over a finite field: just enough to compute
//! minimal polynomials of matrices and split them into coprime parts.
//!
//! Polynomials are coefficient vectors, low-to-high, with no trailing zeros.

use rand::Rng;

use super::field::{Field, FieldElem};
use super::matrix::Matrix;

pub type Poly = Vec<FieldElem>;

pub fn trim(mut a: Poly) -> Poly {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

pub fn degree(a: &[FieldElem]) -> Option<usize> {
    (!a.is_empty()).then(|| a.len() - 1)
}

pub fn one(f: &Field) -> Poly {
    vec![f.one()]
}

/// The monomial `t`.
pub fn var(f: &Field) -> Poly {
    vec![f.zero(), f.one()]
}

pub fn add(f: &Field, a: &[FieldElem], b: &[FieldElem]) -> Poly {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(FieldElem::ZERO);
            let y = b.get(i).copied().unwrap_or(FieldElem::ZERO);
            f.add(x, y)
        })
        .collect();
    trim(out)
}

pub fn sub(f: &Field, a: &[FieldElem], b: &[FieldElem]) -> Poly {
    let nb: Poly = b.iter().map(|&c| f.neg(c)).collect();
    add(f, a, &nb)
}

pub fn mul(f: &Field, a: &[FieldElem], b: &[FieldElem]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![FieldElem::ZERO; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        f.axpy(&mut out[i..i + b.len()], x, b);
    }
    trim(out)
}

pub fn monic(f: &Field, a: &[FieldElem]) -> Poly {
    match a.last() {
        None => Vec::new(),
        Some(&lead) => {
            let inv = f.inv(lead).expect("leading coefficient is nonzero");
            a.iter().map(|&c| f.mul(c, inv)).collect()
        }
    }
}

/// Quotient and remainder of `a` by a nonzero `b`.
pub fn divrem(f: &Field, a: &[FieldElem], b: &[FieldElem]) -> (Poly, Poly) {
    assert!(!b.is_empty(), "division by the zero polynomial");
    let mut r = trim(a.to_vec());
    let db = b.len() - 1;
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let lead_inv = f.inv(b[db]).expect("nonzero leading coefficient");
    let mut q = vec![FieldElem::ZERO; r.len() - db];
    while r.len() > db {
        let dr = r.len() - 1;
        let c = f.mul(r[dr], lead_inv);
        q[dr - db] = c;
        f.axpy(&mut r[dr - db..], f.neg(c), b);
        r = trim(r);
    }
    (trim(q), r)
}

pub fn rem(f: &Field, a: &[FieldElem], b: &[FieldElem]) -> Poly {
    divrem(f, a, b).1
}

/// Monic greatest common divisor.
pub fn gcd(f: &Field, a: &[FieldElem], b: &[FieldElem]) -> Poly {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let r = rem(f, &a, &b);
        a = b;
        b = r;
    }
    monic(f, &a)
}

/// `(g, u, v)` with `u a + v b = g = gcd(a, b)`, `g` monic.
pub fn ext_gcd(f: &Field, a: &[FieldElem], b: &[FieldElem]) -> (Poly, Poly, Poly) {
    let (mut r0, mut r1) = (trim(a.to_vec()), trim(b.to_vec()));
    let (mut s0, mut s1) = (one(f), Vec::new());
    let (mut t0, mut t1) = (Vec::new(), one(f));
    while !r1.is_empty() {
        let (q, r) = divrem(f, &r0, &r1);
        let s = sub(f, &s0, &mul(f, &q, &s1));
        let t = sub(f, &t0, &mul(f, &q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        t0 = std::mem::replace(&mut t1, t);
    }
    let lead = *r0.last().expect("gcd of two zero polynomials");
    let inv = f.inv(lead).expect("nonzero");
    let scale = |p: &[FieldElem]| -> Poly { p.iter().map(|&c| f.mul(c, inv)).collect() };
    (scale(&r0), scale(&s0), scale(&t0))
}

pub fn mulmod(f: &Field, a: &[FieldElem], b: &[FieldElem], m: &[FieldElem]) -> Poly {
    rem(f, &mul(f, a, b), m)
}

pub fn powmod(f: &Field, base: &[FieldElem], mut k: u64, m: &[FieldElem]) -> Poly {
    let mut r = rem(f, &one(f), m);
    let mut b = rem(f, base, m);
    while k > 0 {
        if k & 1 == 1 {
            r = mulmod(f, &r, &b, m);
        }
        b = mulmod(f, &b, &b, m);
        k >>= 1;
    }
    r
}

pub fn derivative(f: &Field, a: &[FieldElem]) -> Poly {
    let out = a.iter().enumerate().skip(1).map(|(i, &c)| f.mul(f.from_int(i as i64), c)).collect();
    trim(out)
}

/// `g` with `g^p = a`, for `a` whose derivative vanishes.
fn pth_root(f: &Field, a: &[FieldElem]) -> Poly {
    let p = f.p() as usize;
    // c^(q/p) is the p-th root of c in F_q
    let k = (f.q() / f.p()) as u64;
    let out = a.iter().step_by(p).map(|&c| f.pow(c, k)).collect();
    trim(out)
}

/// Product of the distinct monic irreducible factors of `a`.
pub fn squarefree_radical(f: &Field, a: &[FieldElem]) -> Poly {
    let a = monic(f, &trim(a.to_vec()));
    if a.len() <= 1 {
        return one(f);
    }
    let d = derivative(f, &a);
    if d.is_empty() {
        return squarefree_radical(f, &pth_root(f, &a));
    }
    let g = gcd(f, &a, &d);
    let h = divrem(f, &a, &g).0;
    let rest = squarefree_radical(f, &g);
    let common = gcd(f, &h, &rest);
    monic(f, &mul(f, &h, &divrem(f, &rest, &common).0))
}

/// Distinct-degree factorization of a monic squarefree polynomial: pairs
/// `(d, product of all irreducible factors of degree d)`.
pub fn distinct_degree(f: &Field, a: &[FieldElem]) -> Vec<(usize, Poly)> {
    let mut rest = monic(f, a);
    let mut out = Vec::new();
    let mut d = 0;
    let mut xq = rem(f, &var(f), &rest);
    while rest.len() > 1 {
        d += 1;
        if 2 * d > rest.len() - 1 {
            out.push((rest.len() - 1, rest.clone()));
            break;
        }
        xq = powmod(f, &xq, f.q() as u64, &rest);
        let g = gcd(f, &sub(f, &xq, &var(f)), &rest);
        if g.len() > 1 {
            rest = divrem(f, &rest, &g).0;
            xq = rem(f, &xq, &rest);
            out.push((d, g));
        }
    }
    out
}

/// Splits a monic squarefree `a` whose irreducible factors all have degree
/// `d` (and which has more than one factor) into a nontrivial factor.
pub fn equal_degree_split<R: Rng>(f: &Field, a: &[FieldElem], d: usize, rng: &mut R) -> Poly {
    let n = a.len() - 1;
    assert!(n > d && n % d == 0, "equal-degree split needs at least two factors");
    loop {
        let r: Poly = trim((0..n).map(|_| f.from_index(rng.gen_range(0..f.q())).unwrap()).collect());
        if r.len() <= 1 {
            continue;
        }
        let g = gcd(f, &r, a);
        if g.len() > 1 && g.len() < a.len() {
            return g;
        }
        let candidate = if f.p() == 2 {
            // absolute trace r + r^2 + ... + r^(2^(e d - 1))
            let mut t = rem(f, &r, a);
            let mut acc = t.clone();
            for _ in 1..(f.e() as usize * d) {
                t = mulmod(f, &t, &t, a);
                acc = add(f, &acc, &t);
            }
            acc
        } else {
            // r^((q^d - 1)/2) = (Π_{i<d} r^(q^i))^((q-1)/2)
            let mut norm = rem(f, &r, a);
            let mut cur = norm.clone();
            for _ in 1..d {
                cur = powmod(f, &cur, f.q() as u64, a);
                norm = mulmod(f, &norm, &cur, a);
            }
            let h = powmod(f, &norm, (f.q() as u64 - 1) / 2, a);
            sub(f, &h, &one(f))
        };
        let g = gcd(f, &candidate, a);
        if g.len() > 1 && g.len() < a.len() {
            return g;
        }
    }
}

/// Some monic irreducible factor of a monic squarefree polynomial.
pub fn irreducible_factor<R: Rng>(f: &Field, a: &[FieldElem], rng: &mut R) -> Poly {
    let (d, mut g) = distinct_degree(f, a).into_iter().next().expect("nonconstant input");
    while g.len() - 1 > d {
        g = equal_degree_split(f, &g, d, rng);
    }
    g
}

pub fn is_irreducible(f: &Field, a: &[FieldElem]) -> bool {
    let a = monic(f, a);
    if a.len() < 2 {
        return false;
    }
    let n = a.len() - 1;
    if squarefree_radical(f, &a) != a {
        return false;
    }
    let dd = distinct_degree(f, &a);
    dd.len() == 1 && dd[0].0 == n
}

/// Evaluates a polynomial at a square matrix (Horner).
pub fn eval_matrix(poly: &[FieldElem], m: &Matrix) -> Matrix {
    let f = m.field();
    let n = m.rows();
    let mut acc = Matrix::zeros(f, n, n);
    let id = Matrix::identity(f, n);
    for &c in poly.iter().rev() {
        acc = acc.mul(m);
        acc.add_scaled(c, &id);
    }
    acc
}

/// `poly(m)·v` without forming `poly(m)`.
pub fn eval_matrix_vec(poly: &[FieldElem], m: &Matrix, v: &[FieldElem]) -> Vec<FieldElem> {
    let f = m.field();
    let mut acc = vec![FieldElem::ZERO; v.len()];
    for &c in poly.iter().rev() {
        acc = m.mul_vec(&acc);
        f.axpy(&mut acc, c, v);
    }
    acc
}

/// Minimal polynomial of a square matrix, monic.
pub fn minimal_polynomial(m: &Matrix) -> Poly {
    let f = m.field().clone();
    let n = m.rows();
    let mut mu = one(&f);
    for i in 0..n {
        let mut e = vec![FieldElem::ZERO; n];
        e[i] = f.one();
        let w = eval_matrix_vec(&mu, m, &e);
        if w.iter().all(|x| x.is_zero()) {
            continue;
        }
        let local = vector_minimal_polynomial(m, &w);
        mu = mul(&f, &mu, &local);
    }
    monic(&f, &mu)
}

/// Monic generator of `{g : g(m) w = 0}`.
pub fn vector_minimal_polynomial(m: &Matrix, w: &[FieldElem]) -> Poly {
    let f = m.field().clone();
    // reduced Krylov vectors with their pivots and polynomial expressions
    let mut reduced: Vec<(usize, Vec<FieldElem>, Poly)> = Vec::new();
    let mut v = w.to_vec();
    let mut k = 0;
    loop {
        let mut expr = vec![FieldElem::ZERO; k + 1];
        expr[k] = f.one();
        let mut cur = v.clone();
        for (piv, r, e) in &reduced {
            let c = cur[*piv];
            if !c.is_zero() {
                let nc = f.neg(c);
                f.axpy(&mut cur, nc, r);
                let scaled: Poly = e.iter().map(|&x| f.mul(nc, x)).collect();
                expr = add(&f, &expr, &scaled);
            }
        }
        match cur.iter().position(|x| !x.is_zero()) {
            None => return monic(&f, &expr),
            Some(piv) => {
                let inv = f.inv(cur[piv]).expect("nonzero");
                f.scale(&mut cur, inv);
                let expr: Poly = expr.iter().map(|&x| f.mul(inv, x)).collect();
                reduced.push((piv, cur, expr));
            }
        }
        v = m.mul_vec(&v);
        k += 1;
    }
}
