//! Dense univariate polynomials over a [`Field`], stored as ascending
//! coefficient vectors. A trimmed polynomial has a nonzero leading
//! coefficient; the zero polynomial is the empty vector.

use super::{Elem, Field};

pub fn trim(field: &Field, mut p: Vec<Elem>) -> Vec<Elem> {
    while p.last().is_some_and(|c| field.is_zero(c)) {
        p.pop();
    }
    p
}

pub fn degree(p: &[Elem]) -> Option<usize> {
    p.len().checked_sub(1)
}

pub fn is_monic(field: &Field, p: &[Elem]) -> bool {
    p.last().is_some_and(|c| field.is_one(c))
}

/// `x^n`
pub fn monomial(field: &Field, n: usize) -> Vec<Elem> {
    let mut v = vec![field.zero(); n + 1];
    v[n] = field.one();
    v
}

pub fn add(field: &Field, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    let n = a.len().max(b.len());
    let z = field.zero();
    let out = (0..n).map(|i| field.add(a.get(i).unwrap_or(&z), b.get(i).unwrap_or(&z))).collect();
    trim(field, out)
}

pub fn sub(field: &Field, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    let n = a.len().max(b.len());
    let z = field.zero();
    let out = (0..n).map(|i| field.sub(a.get(i).unwrap_or(&z), b.get(i).unwrap_or(&z))).collect();
    trim(field, out)
}

pub fn scale(field: &Field, p: &[Elem], c: &Elem) -> Vec<Elem> {
    trim(field, p.iter().map(|x| field.mul(x, c)).collect())
}

pub fn mul(field: &Field, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    let a = trim(field, a.to_vec());
    let b = trim(field, b.to_vec());
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![field.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if field.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            field.add_mul_assign(&mut out[i + j], x, y);
        }
    }
    trim(field, out)
}

/// Quotient and remainder. Panics if `b` is zero.
pub fn divrem(field: &Field, a: &[Elem], b: &[Elem]) -> (Vec<Elem>, Vec<Elem>) {
    let b = trim(field, b.to_vec());
    assert!(!b.is_empty(), "polynomial division by zero");
    let mut r = trim(field, a.to_vec());
    let db = b.len() - 1;
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lead_inv = field.inv(&b[db]).expect("nonzero leading coefficient");
    let mut q = vec![field.zero(); r.len() - db];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = field.mul(r.last().unwrap(), &lead_inv);
        for (j, y) in b.iter().enumerate() {
            let t = field.mul(&c, y);
            r[shift + j] = field.sub(&r[shift + j], &t);
        }
        q[shift] = c;
        r.pop();
        r = trim(field, r);
    }
    (trim(field, q), r)
}

pub fn rem(field: &Field, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    divrem(field, a, b).1
}

pub fn make_monic(field: &Field, p: &[Elem]) -> Vec<Elem> {
    let p = trim(field, p.to_vec());
    match p.last() {
        None => p,
        Some(l) => {
            let inv = field.inv(l).expect("nonzero leading coefficient");
            scale(field, &p, &inv)
        }
    }
}

/// Monic greatest common divisor.
pub fn gcd(field: &Field, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    let mut a = trim(field, a.to_vec());
    let mut b = trim(field, b.to_vec());
    while !b.is_empty() {
        let r = rem(field, &a, &b);
        a = b;
        b = r;
    }
    make_monic(field, &a)
}

/// Extended gcd: returns `(g, s, t)` with `s*a + t*b = g` (g not normalized).
pub fn xgcd(field: &Field, a: &[Elem], b: &[Elem]) -> (Vec<Elem>, Vec<Elem>, Vec<Elem>) {
    let mut r0 = trim(field, a.to_vec());
    let mut r1 = trim(field, b.to_vec());
    let mut s0 = vec![field.one()];
    let mut s1: Vec<Elem> = Vec::new();
    let mut t0: Vec<Elem> = Vec::new();
    let mut t1 = vec![field.one()];
    while !r1.is_empty() {
        let (q, r) = divrem(field, &r0, &r1);
        let s2 = sub(field, &s0, &mul(field, &q, &s1));
        let t2 = sub(field, &t0, &mul(field, &q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    (r0, s0, t0)
}

/// Horner evaluation of `p` at `x`, where `x` lives in `target` and the
/// coefficients of `p` are mapped into `target` by `embed`.
pub fn eval_in<F>(target: &Field, p: &[Elem], x: &Elem, embed: F) -> Elem
where
    F: Fn(&Elem) -> Elem,
{
    let mut acc = target.zero();
    for c in p.iter().rev() {
        acc = target.mul(&acc, x);
        acc = target.add(&acc, &embed(c));
    }
    acc
}

pub fn eval(field: &Field, p: &[Elem], x: &Elem) -> Elem {
    eval_in(field, p, x, |c| c.clone())
}

pub fn derivative(field: &Field, p: &[Elem]) -> Vec<Elem> {
    let out = p.iter().enumerate().skip(1).map(|(i, c)| field.mul(&field.from_i64(i as i64), c)).collect();
    trim(field, out)
}

/// `base^e mod m`.
pub fn pow_mod(field: &Field, base: &[Elem], mut e: u128, m: &[Elem]) -> Vec<Elem> {
    let mut b = rem(field, base, m);
    let mut acc = rem(field, &[field.one()], m);
    while e > 0 {
        if e & 1 == 1 {
            acc = rem(field, &mul(field, &acc, &b), m);
        }
        b = rem(field, &mul(field, &b, &b), m);
        e >>= 1;
    }
    acc
}
