//! Irreducibility certificates.
//!
//! Over finite fields the answer is exact. Over ℚ we use the rational root
//! test (complete up to degree 3) and, above that, factorization patterns
//! modulo small primes: every factorization over ℚ reduces to one modulo
//! `p`, so the possible factor degrees over ℚ lie in the intersection of the
//! subset-sum sets of all patterns. If that intersection is `{0, n}` the
//! polynomial is irreducible. Anything else is reported as `Asserted`.

use super::{is_prime, poly, Elem, Field, ScalarError};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Irreducibility {
    Yes,
    No,
    /// Not certified; callers rely on an operator assertion.
    Asserted,
}

/// Largest number of candidate factors the exhaustive search will try
/// before switching to Rabin's test.
const EXHAUSTIVE_BUDGET: u128 = 2_000_000;

pub fn poly_irreducible(field: &Field, f: &[Elem]) -> Result<Irreducibility, ScalarError> {
    let f = poly::trim(field, f.to_vec());
    if f.is_empty() || !poly::is_monic(field, &f) {
        return Err(ScalarError::NotMonic);
    }
    let n = f.len() - 1;
    if n == 0 {
        return Err(ScalarError::NotMonic);
    }
    if n == 1 {
        return Ok(Irreducibility::Yes);
    }
    if field.is_finite() {
        let q = field.size().ok_or_else(|| ScalarError::SpecMismatch("field too large".into()))?;
        let budget: u128 = (1..=n / 2).map(|d| q.saturating_pow(d as u32)).sum();
        let irreducible = if budget <= EXHAUSTIVE_BUDGET { exhaustive_factor(field, &f).is_none() } else { rabin_irreducible(field, &f) };
        return Ok(if irreducible { Irreducibility::Yes } else { Irreducibility::No });
    }
    match field {
        Field::Rational => Ok(rational_certificate(&f)),
        _ => Ok(Irreducibility::Asserted),
    }
}

/// Finds a monic factor of degree `1..=deg/2` by enumeration, finite fields
/// only.
pub fn exhaustive_factor(field: &Field, f: &[Elem]) -> Option<Vec<Elem>> {
    let elems = field.elements(1 << 20)?;
    let n = f.len().checked_sub(1)?;
    for d in 1..=n / 2 {
        let mut idx = vec![0usize; d];
        loop {
            let mut cand: Vec<Elem> = idx.iter().map(|&i| elems[i].clone()).collect();
            cand.push(field.one());
            if poly::rem(field, f, &cand).is_empty() {
                return Some(cand);
            }
            let mut k = 0;
            loop {
                if k == d {
                    break;
                }
                idx[k] += 1;
                if idx[k] < elems.len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
            if k == d {
                break;
            }
        }
    }
    None
}

fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Rabin's test over a finite field of size `q`:
/// `x^(q^n) = x mod f` and `gcd(x^(q^(n/r)) - x, f) = 1` for each prime `r | n`.
pub fn rabin_irreducible(field: &Field, f: &[Elem]) -> bool {
    let q = field.size().expect("finite field");
    let n = f.len() - 1;
    let x = poly::monomial(field, 1);
    let frob_iter = |k: usize| {
        let mut h = x.clone();
        for _ in 0..k {
            h = poly::pow_mod(field, &h, q, f);
        }
        h
    };
    if poly::sub(field, &frob_iter(n), &poly::rem(field, &x, f)).iter().any(|c| !field.is_zero(c)) {
        return false;
    }
    for r in prime_factors(n) {
        let h = poly::sub(field, &frob_iter(n / r), &x);
        if poly::gcd(field, &h, f).len() != 1 {
            return false;
        }
    }
    true
}

/// Degrees of the irreducible factors of a squarefree `f` over a finite
/// field (distinct-degree factorization).
pub fn factor_degrees(field: &Field, f: &[Elem]) -> Vec<usize> {
    let q = field.size().expect("finite field");
    let x = poly::monomial(field, 1);
    let mut rest = poly::make_monic(field, f);
    let mut h = x.clone();
    let mut out = Vec::new();
    let mut i = 0;
    while rest.len() > 1 {
        i += 1;
        if 2 * i > rest.len() - 1 {
            out.push(rest.len() - 1);
            break;
        }
        h = poly::pow_mod(field, &h, q, &rest);
        let g = poly::gcd(field, &poly::sub(field, &h, &x), &rest);
        let gdeg = g.len() - 1;
        if gdeg > 0 {
            out.extend(std::iter::repeat_n(i, gdeg / i));
            rest = poly::divrem(field, &rest, &g).0;
            h = poly::rem(field, &h, &rest);
        }
    }
    out.sort_unstable();
    out
}

/// Integer coefficients of `c * f` for the least positive `c` clearing all
/// denominators.
pub fn integer_coefficients(f: &[Elem]) -> Vec<BigInt> {
    let rats: Vec<&BigRational> = f.iter().map(|c| Field::as_rational(c).expect("rational")).collect();
    let l = rats.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    rats.iter().map(|r| (*r * BigRational::from_integer(l.clone())).to_integer()).collect()
}

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs().to_u64()?;
    if n == 0 || n > 1_000_000_000_000 {
        return None;
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Some(small.into_iter().map(BigInt::from).collect())
}

/// Rational roots of a polynomial with rational coefficients. `None` when
/// the candidate set is too large to enumerate.
pub fn rational_roots(f: &[Elem]) -> Option<Vec<BigRational>> {
    let field = Field::Rational;
    let f = poly::trim(&field, f.to_vec());
    if f.len() < 2 {
        return Some(Vec::new());
    }
    let mut roots = Vec::new();
    let mut g = f.clone();
    // strip factors of x first
    let mut z = 0;
    while g.first().is_some_and(|c| field.is_zero(c)) {
        g.remove(0);
        z += 1;
    }
    if z > 0 {
        roots.push(BigRational::zero());
    }
    if g.len() < 2 {
        return Some(roots);
    }
    let ints = integer_coefficients(&g);
    let a0 = ints.first().unwrap();
    let an = ints.last().unwrap();
    let ps = divisors(a0)?;
    let qs = divisors(an)?;
    for p in &ps {
        for q in &qs {
            for sign in [1i64, -1] {
                let r = BigRational::new(p * BigInt::from(sign), q.clone());
                let e = poly::eval(&field, &g, &Elem::Q(r.clone()));
                if field.is_zero(&e) && !roots.contains(&r) {
                    roots.push(r);
                }
            }
        }
    }
    roots.sort();
    Some(roots)
}

fn rational_certificate(f: &[Elem]) -> Irreducibility {
    let n = f.len() - 1;
    match rational_roots(f) {
        Some(roots) if !roots.is_empty() => return Irreducibility::No,
        Some(_) if n <= 3 => return Irreducibility::Yes,
        _ => {}
    }
    let ints = integer_coefficients(f);
    // allowed[d] = some factorization could contain a factor of degree d
    let mut allowed = vec![true; n + 1];
    let mut p = 2u64;
    let mut used = 0;
    while used < 40 && p < 2000 {
        if is_prime(p) {
            let pb = BigInt::from(p);
            if !(ints[n].clone() % &pb).is_zero() {
                let fp = Field::Prime(p);
                let reduced: Vec<Elem> = ints.iter().map(|c| fp.from_bigint(c)).collect();
                let reduced = poly::make_monic(&fp, &reduced);
                let der = poly::derivative(&fp, &reduced);
                if !der.is_empty() && poly::gcd(&fp, &reduced, &der).len() == 1 {
                    used += 1;
                    let degs = factor_degrees(&fp, &reduced);
                    let mut sums = vec![false; n + 1];
                    sums[0] = true;
                    for d in degs {
                        for s in (d..=n).rev() {
                            if sums[s - d] {
                                sums[s] = true;
                            }
                        }
                    }
                    for (a, s) in allowed.iter_mut().zip(&sums) {
                        *a &= *s;
                    }
                    if allowed[1..n].iter().all(|a| !a) {
                        return Irreducibility::Yes;
                    }
                }
            }
        }
        p += 1;
    }
    Irreducibility::Asserted
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(field: &Field, v: &[i64]) -> Vec<Elem> {
        v.iter().map(|&c| field.from_i64(c)).collect()
    }

    #[test]
    fn gf2_quadratic() {
        let f = Field::prime(2).unwrap();
        assert_eq!(poly_irreducible(&f, &ints(&f, &[1, 1, 1])).unwrap(), Irreducibility::Yes);
        assert_eq!(poly_irreducible(&f, &ints(&f, &[1, 0, 1])).unwrap(), Irreducibility::No);
    }

    #[test]
    fn sqrt2_minimal_polynomial() {
        let f = Field::Rational;
        assert_eq!(poly_irreducible(&f, &ints(&f, &[-2, 0, 1])).unwrap(), Irreducibility::Yes);
        assert_eq!(poly_irreducible(&f, &ints(&f, &[-4, 0, 1])).unwrap(), Irreducibility::No);
    }

    #[test]
    fn sextic_for_cube_root_of_two() {
        // Galois group S3 in its regular representation: no single prime
        // keeps it irreducible, but patterns 3+3 and 2+2+2 together exclude
        // every proper factor degree.
        let f = Field::Rational;
        let g = ints(&f, &[108, 0, 0, 0, 0, 0, 1]);
        assert_eq!(poly_irreducible(&f, &g).unwrap(), Irreducibility::Yes);
    }

    #[test]
    fn quartic_without_roots_but_reducible() {
        // (x^2+1)(x^2+2) has no rational roots; no certificate exists.
        let f = Field::Rational;
        let g = ints(&f, &[2, 0, 3, 0, 1]);
        assert_eq!(poly_irreducible(&f, &g).unwrap(), Irreducibility::Asserted);
    }

    #[test]
    fn non_monic_input_rejected() {
        let f = Field::Rational;
        assert_eq!(poly_irreducible(&f, &ints(&f, &[1, 2])), Err(ScalarError::NotMonic));
    }

    #[test]
    fn distinct_degree_pattern() {
        let f = Field::prime(5).unwrap();
        // (x-1)(x-2)(x^2+2): x^2+2 has no roots mod 5
        let a = poly::mul(&f, &ints(&f, &[-1, 1]), &ints(&f, &[-2, 1]));
        let g = poly::mul(&f, &a, &ints(&f, &[2, 0, 1]));
        assert_eq!(factor_degrees(&f, &g), vec![1, 1, 2]);
    }

    #[test]
    fn exhaustive_and_rabin_agree_over_gf3() {
        let f = Field::prime(3).unwrap();
        let elems = f.elements(16).unwrap();
        // every monic quartic over GF(3)
        for a in &elems {
            for b in &elems {
                for c in &elems {
                    for d in &elems {
                        let g = vec![a.clone(), b.clone(), c.clone(), d.clone(), f.one()];
                        assert_eq!(exhaustive_factor(&f, &g).is_none(), rabin_irreducible(&f, &g));
                    }
                }
            }
        }
    }

    #[test]
    fn rational_roots_found() {
        let f = Field::Rational;
        // 2x^2 - 3x + 1 = (2x-1)(x-1)
        let g = vec![f.from_i64(1), f.from_i64(-3), f.from_i64(2)];
        let r = rational_roots(&g).unwrap();
        assert_eq!(r, vec![BigRational::new(1.into(), 2.into()), BigRational::one()]);
    }
}
