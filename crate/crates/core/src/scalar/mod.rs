//! Exact scalars: the rationals, prime fields and simple algebraic extensions
//! `base[x]/(g)`, together with polynomials, field homomorphisms and exact
//! linear algebra over any of them.
//!
//! A [`Field`] is a runtime description and performs all arithmetic on
//! [`Elem`] values. Elements carry no reference to their field; the caller
//! keeps them paired. Operations on mismatched variants panic in the
//! infallible API and return [`ScalarError::SpecMismatch`] in the `try_*` API.

pub mod hom;
pub mod irreducible;
pub mod linalg;
pub mod poly;
pub mod subfield;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::Rng;
use std::fmt;
use thiserror::Error;

pub use hom::FieldHom;
pub use irreducible::{poly_irreducible, Irreducibility};
pub use linalg::{kernel, rank, row_reduce, solve, LinearSolution, Matrix, RowSpace};
pub use subfield::Subfield;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("element does not belong to field {0}")]
    SpecMismatch(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus must be monic of degree at least 2")]
    BadModulus,
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("element has no inverse (modulus is reducible)")]
    NotInvertible,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("cannot parse scalar: {0}")]
    Parse(String),
}

/// A field of coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    Prime(u64),
    Extension(Box<ExtensionField>),
}

/// `base[x]/(modulus)`; `modulus` is monic, ascending, of degree >= 2.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExtensionField {
    pub base: Field,
    pub modulus: Vec<Elem>,
}

/// A field element in canonical form: reduced fraction, residue in `[0, p)`,
/// or a residue polynomial padded to exactly `deg(modulus)` coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Elem {
    Q(BigRational),
    P(u64),
    Ext(Vec<Elem>),
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = ((acc as u128 * b as u128) % p as u128) as u64;
        }
        b = ((b as u128 * b as u128) % p as u128) as u64;
        e >>= 1;
    }
    acc
}

impl Field {
    pub fn rational() -> Self {
        Field::Rational
    }

    pub fn prime(p: u64) -> Result<Self, ScalarError> {
        if !is_prime(p) || p > u32::MAX as u64 {
            return Err(ScalarError::NotPrime(p));
        }
        Ok(Field::Prime(p))
    }

    /// Builds `base[x]/(modulus)`. Irreducibility is not checked here; see
    /// [`poly_irreducible`].
    pub fn extension(base: Field, modulus: Vec<Elem>) -> Result<Self, ScalarError> {
        let modulus = poly::trim(&base, modulus);
        if modulus.len() < 3 {
            return Err(ScalarError::BadModulus);
        }
        for c in &modulus {
            base.check(c)?;
        }
        if !base.is_one(modulus.last().unwrap()) {
            return Err(ScalarError::BadModulus);
        }
        Ok(Field::Extension(Box::new(ExtensionField { base, modulus })))
    }

    /// Convenience: extension whose modulus coefficients are integers.
    pub fn extension_int(base: Field, modulus: &[i64]) -> Result<Self, ScalarError> {
        let coeffs = modulus.iter().map(|&c| base.from_i64(c)).collect();
        Field::extension(base, coeffs)
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => *p,
            Field::Extension(e) => e.base.characteristic(),
        }
    }

    /// Degree over the immediate base field (1 for prime fields and ℚ).
    pub fn degree(&self) -> usize {
        match self {
            Field::Extension(e) => e.modulus.len() - 1,
            _ => 1,
        }
    }

    /// Degree over the prime field.
    pub fn absolute_degree(&self) -> usize {
        match self {
            Field::Extension(e) => self.degree() * e.base.absolute_degree(),
            _ => 1,
        }
    }

    pub fn base(&self) -> Option<&Field> {
        match self {
            Field::Extension(e) => Some(&e.base),
            _ => None,
        }
    }

    pub fn modulus(&self) -> Option<&[Elem]> {
        match self {
            Field::Extension(e) => Some(&e.modulus),
            _ => None,
        }
    }

    /// Number of elements, `None` for infinite fields or when it overflows.
    pub fn size(&self) -> Option<u128> {
        match self {
            Field::Rational => None,
            Field::Prime(p) => Some(*p as u128),
            Field::Extension(e) => {
                let q = e.base.size()?;
                q.checked_pow(self.degree() as u32)
            }
        }
    }

    pub fn is_finite(&self) -> bool {
        self.characteristic() != 0
    }

    pub fn zero(&self) -> Elem {
        match self {
            Field::Rational => Elem::Q(BigRational::zero()),
            Field::Prime(_) => Elem::P(0),
            Field::Extension(e) => Elem::Ext(vec![e.base.zero(); self.degree()]),
        }
    }

    pub fn one(&self) -> Elem {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Elem {
        match self {
            Field::Rational => Elem::Q(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Elem::P(n.rem_euclid(*p as i64) as u64),
            Field::Extension(e) => {
                let mut v = vec![e.base.zero(); self.degree()];
                v[0] = e.base.from_i64(n);
                Elem::Ext(v)
            }
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> Elem {
        match self {
            Field::Rational => Elem::Q(BigRational::from_integer(n.clone())),
            Field::Prime(p) => {
                let r = n.mod_floor(&BigInt::from(*p));
                Elem::P(r.to_u64().unwrap())
            }
            Field::Extension(e) => self.embed_base(e.base.from_bigint(n)),
        }
    }

    /// `num / den` as a field element.
    pub fn from_ratio(&self, num: i64, den: i64) -> Result<Elem, ScalarError> {
        let d = self.from_i64(den);
        self.div(&self.from_i64(num), &d)
    }

    pub fn from_rational(&self, q: &BigRational) -> Result<Elem, ScalarError> {
        let n = self.from_bigint(q.numer());
        let d = self.from_bigint(q.denom());
        self.div(&n, &d)
    }

    /// The class of `x` in an extension field.
    pub fn generator(&self) -> Option<Elem> {
        match self {
            Field::Extension(e) => {
                let mut v = vec![e.base.zero(); self.degree()];
                v[1] = e.base.one();
                Some(Elem::Ext(v))
            }
            _ => None,
        }
    }

    /// Embeds an element of the immediate base field.
    pub fn embed_base(&self, b: Elem) -> Elem {
        match self {
            Field::Extension(e) => {
                let mut v = vec![e.base.zero(); self.degree()];
                v[0] = b;
                Elem::Ext(v)
            }
            _ => b,
        }
    }

    /// Builds an extension element from base coefficients (reduced).
    pub fn from_coeffs(&self, coeffs: Vec<Elem>) -> Elem {
        match self {
            Field::Extension(e) => {
                let r = poly::rem(&e.base, &coeffs, &e.modulus);
                Elem::Ext(self.pad(r))
            }
            _ => coeffs.into_iter().next().unwrap_or_else(|| self.zero()),
        }
    }

    /// Base coefficients of an element (length = degree).
    pub fn coeffs(&self, a: &Elem) -> Vec<Elem> {
        match (self, a) {
            (Field::Extension(_), Elem::Ext(v)) => v.clone(),
            _ => vec![a.clone()],
        }
    }

    fn pad(&self, mut v: Vec<Elem>) -> Vec<Elem> {
        if let Field::Extension(e) = self {
            v.resize(self.degree(), e.base.zero());
        }
        v
    }

    /// Checks that `a` is a canonical element of this field.
    pub fn check(&self, a: &Elem) -> Result<(), ScalarError> {
        let ok = match (self, a) {
            (Field::Rational, Elem::Q(_)) => true,
            (Field::Prime(p), Elem::P(x)) => x < p,
            (Field::Extension(e), Elem::Ext(v)) => v.len() == self.degree() && v.iter().all(|c| e.base.check(c).is_ok()),
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(ScalarError::SpecMismatch(self.to_string()))
        }
    }

    pub fn is_zero(&self, a: &Elem) -> bool {
        match a {
            Elem::Q(q) => q.is_zero(),
            Elem::P(x) => *x == 0,
            Elem::Ext(v) => {
                let base = self.base().expect("extension element in non-extension field");
                v.iter().all(|c| base.is_zero(c))
            }
        }
    }

    pub fn is_one(&self, a: &Elem) -> bool {
        *a == self.one()
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        match (self, a, b) {
            (Field::Rational, Elem::Q(x), Elem::Q(y)) => Elem::Q(x + y),
            (Field::Prime(p), Elem::P(x), Elem::P(y)) => Elem::P((x + y) % p),
            (Field::Extension(e), Elem::Ext(x), Elem::Ext(y)) => Elem::Ext(x.iter().zip(y).map(|(s, t)| e.base.add(s, t)).collect()),
            _ => panic!("field mismatch in add"),
        }
    }

    pub fn neg(&self, a: &Elem) -> Elem {
        match (self, a) {
            (Field::Rational, Elem::Q(x)) => Elem::Q(-x),
            (Field::Prime(p), Elem::P(x)) => Elem::P((p - x) % p),
            (Field::Extension(e), Elem::Ext(x)) => Elem::Ext(x.iter().map(|s| e.base.neg(s)).collect()),
            _ => panic!("field mismatch in neg"),
        }
    }

    pub fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        match (self, a, b) {
            (Field::Rational, Elem::Q(x), Elem::Q(y)) => Elem::Q(x - y),
            (Field::Prime(p), Elem::P(x), Elem::P(y)) => Elem::P((x + p - y) % p),
            _ => self.add(a, &self.neg(b)),
        }
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        match (self, a, b) {
            (Field::Rational, Elem::Q(x), Elem::Q(y)) => Elem::Q(x * y),
            (Field::Prime(p), Elem::P(x), Elem::P(y)) => Elem::P(((*x as u128 * *y as u128) % *p as u128) as u64),
            (Field::Extension(e), Elem::Ext(x), Elem::Ext(y)) => {
                let prod = poly::mul(&e.base, x, y);
                Elem::Ext(self.pad(poly::rem(&e.base, &prod, &e.modulus)))
            }
            _ => panic!("field mismatch in mul"),
        }
    }

    /// `acc += a * b`, the inner-loop primitive of the linear algebra.
    pub fn add_mul_assign(&self, acc: &mut Elem, a: &Elem, b: &Elem) {
        match (self, &mut *acc, a, b) {
            (Field::Rational, Elem::Q(s), Elem::Q(x), Elem::Q(y)) => {
                *s += x * y;
            }
            _ => {
                let t = self.mul(a, b);
                *acc = self.add(acc, &t);
            }
        }
    }

    pub fn inv(&self, a: &Elem) -> Result<Elem, ScalarError> {
        if self.is_zero(a) {
            return Err(ScalarError::DivisionByZero);
        }
        match (self, a) {
            (Field::Rational, Elem::Q(x)) => Ok(Elem::Q(x.recip())),
            (Field::Prime(p), Elem::P(x)) => Ok(Elem::P(mod_pow(*x, p - 2, *p))),
            (Field::Extension(e), Elem::Ext(x)) => {
                let (g, s, _) = poly::xgcd(&e.base, x, &e.modulus);
                if g.len() != 1 {
                    return Err(ScalarError::NotInvertible);
                }
                let ginv = e.base.inv(&g[0])?;
                let s = poly::scale(&e.base, &s, &ginv);
                Ok(Elem::Ext(self.pad(poly::rem(&e.base, &s, &e.modulus))))
            }
            _ => Err(ScalarError::SpecMismatch(self.to_string())),
        }
    }

    pub fn div(&self, a: &Elem, b: &Elem) -> Result<Elem, ScalarError> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn pow(&self, a: &Elem, mut e: u64) -> Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    pub fn try_add(&self, a: &Elem, b: &Elem) -> Result<Elem, ScalarError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.add(a, b))
    }

    pub fn try_mul(&self, a: &Elem, b: &Elem) -> Result<Elem, ScalarError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul(a, b))
    }

    pub fn try_neg(&self, a: &Elem) -> Result<Elem, ScalarError> {
        self.check(a)?;
        Ok(self.neg(a))
    }

    pub fn try_inv(&self, a: &Elem) -> Result<Elem, ScalarError> {
        self.check(a)?;
        self.inv(a)
    }

    /// All elements of a finite field with at most `limit` elements.
    pub fn elements(&self, limit: u128) -> Option<Vec<Elem>> {
        let size = self.size()?;
        if size > limit {
            return None;
        }
        match self {
            Field::Rational => None,
            Field::Prime(p) => Some((0..*p).map(Elem::P).collect()),
            Field::Extension(e) => {
                let base_elems = e.base.elements(limit)?;
                let mut out: Vec<Vec<Elem>> = vec![Vec::new()];
                for _ in 0..self.degree() {
                    let mut next = Vec::with_capacity(out.len() * base_elems.len());
                    for prefix in &out {
                        for b in &base_elems {
                            let mut v = prefix.clone();
                            v.push(b.clone());
                            next.push(v);
                        }
                    }
                    out = next;
                }
                Some(out.into_iter().map(Elem::Ext).collect())
            }
        }
    }

    /// A pseudo-random element with small coefficients in `{-2, ..., 2}`.
    pub fn random_small<R: Rng + ?Sized>(&self, rng: &mut R) -> Elem {
        match self {
            Field::Extension(e) => Elem::Ext((0..self.degree()).map(|_| e.base.random_small(rng)).collect()),
            _ => self.from_i64(rng.gen_range(-2..=2)),
        }
    }

    /// Parses `"a"`, `"a/b"` (any field) or a bare residue.
    pub fn parse_scalar(&self, s: &str) -> Result<Elem, ScalarError> {
        let s = s.trim();
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let n: BigInt = n.parse().map_err(|_| ScalarError::Parse(s.to_string()))?;
        let d: BigInt = d.parse().map_err(|_| ScalarError::Parse(s.to_string()))?;
        if d.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        self.from_rational(&BigRational::new(n, d))
    }

    /// Renders a scalar of a non-extension field as `"a"` or `"a/b"`.
    pub fn format_scalar(a: &Elem) -> String {
        match a {
            Elem::Q(q) => {
                if q.is_integer() {
                    q.numer().to_string()
                } else {
                    format!("{}/{}", q.numer(), q.denom())
                }
            }
            Elem::P(x) => x.to_string(),
            Elem::Ext(_) => a.to_string(),
        }
    }

    /// For ℚ: the element as a rational, used by integrality tests.
    pub fn as_rational(a: &Elem) -> Option<&BigRational> {
        match a {
            Elem::Q(q) => Some(q),
            _ => None,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => f.write_str("Q"),
            Field::Prime(p) => write!(f, "GF({p})"),
            Field::Extension(e) => {
                write!(f, "{}[x]/(", e.base)?;
                let terms: Vec<String> = e
                    .modulus
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !e.base.is_zero(c))
                    .map(|(i, c)| match i {
                        0 => c.to_string(),
                        1 => format!("{c}*x"),
                        _ => format!("{c}*x^{i}"),
                    })
                    .collect();
                write!(f, "{})", terms.join(" + "))
            }
        }
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Elem::Q(q) => {
                if q.is_integer() {
                    write!(f, "{}", q.numer())
                } else if q.is_negative() {
                    write!(f, "-{}/{}", -q.numer(), q.denom())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Elem::P(x) => write!(f, "{x}"),
            Elem::Ext(v) => {
                f.write_str("[")?;
                for (i, c) in v.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{c}")?;
                }
                f.write_str("]")
            }
        }
    }
}

/// Dense vector helpers over a field.
pub mod vector {
    use super::{Elem, Field};

    pub fn zeros(field: &Field, n: usize) -> Vec<Elem> {
        vec![field.zero(); n]
    }

    pub fn unit(field: &Field, n: usize, i: usize) -> Vec<Elem> {
        let mut v = zeros(field, n);
        v[i] = field.one();
        v
    }

    pub fn add(field: &Field, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
        a.iter().zip(b).map(|(x, y)| field.add(x, y)).collect()
    }

    pub fn sub(field: &Field, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
        a.iter().zip(b).map(|(x, y)| field.sub(x, y)).collect()
    }

    pub fn neg(field: &Field, a: &[Elem]) -> Vec<Elem> {
        a.iter().map(|x| field.neg(x)).collect()
    }

    pub fn scale(field: &Field, c: &Elem, a: &[Elem]) -> Vec<Elem> {
        a.iter().map(|x| field.mul(c, x)).collect()
    }

    /// `acc += c * a`
    pub fn axpy(field: &Field, acc: &mut [Elem], c: &Elem, a: &[Elem]) {
        if field.is_zero(c) {
            return;
        }
        for (s, x) in acc.iter_mut().zip(a) {
            if !field.is_zero(x) {
                field.add_mul_assign(s, c, x);
            }
        }
    }

    pub fn is_zero(field: &Field, a: &[Elem]) -> bool {
        a.iter().all(|x| field.is_zero(x))
    }

    pub fn support(field: &Field, a: &[Elem]) -> Vec<usize> {
        a.iter().enumerate().filter(|(_, x)| !field.is_zero(x)).map(|(i, _)| i).collect()
    }
}
