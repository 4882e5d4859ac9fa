//! Homomorphisms out of a simple extension `base[x]/(g)`, determined by the
//! image of the generator. The base field is fixed pointwise.

use super::{poly, Elem, Field, ScalarError};
use crate::report::ValidationReport;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldHom {
    pub source: Field,
    pub target: Field,
    pub generator_image: Elem,
}

impl FieldHom {
    pub fn new(source: Field, target: Field, generator_image: Elem) -> Result<Self, ScalarError> {
        let src_base = source.base().ok_or_else(|| ScalarError::SpecMismatch(format!("{source} is not an extension")))?;
        if !target_contains_base(&target, src_base) {
            return Err(ScalarError::SpecMismatch(format!("{target} does not contain the base field {src_base}")));
        }
        target.check(&generator_image)?;
        Ok(Self { source, target, generator_image })
    }

    fn source_base(&self) -> &Field {
        self.source.base().expect("checked at construction")
    }

    fn embed_base(&self, c: &Elem) -> Elem {
        if self.target == *self.source_base() {
            c.clone()
        } else {
            self.target.embed_base(c.clone())
        }
    }

    /// Image of an arbitrary source element.
    pub fn apply(&self, a: &Elem) -> Elem {
        let coeffs = self.source.coeffs(a);
        poly::eval_in(&self.target, &coeffs, &self.generator_image, |c| self.embed_base(c))
    }

    /// `self ∘ other`; requires `other.target == self.source`.
    pub fn compose(&self, other: &FieldHom) -> Result<FieldHom, ScalarError> {
        if other.target != self.source {
            return Err(ScalarError::SpecMismatch("composition of incompatible homs".into()));
        }
        FieldHom::new(other.source.clone(), self.target.clone(), self.apply(&other.generator_image))
    }

    /// Empty iff the generator image is a root of the modulus in the target;
    /// additivity, multiplicativity and unitality are then re-checked on the
    /// full power-basis grid.
    pub fn verify(&self) -> ValidationReport {
        let mut report = ValidationReport::new();
        let g = self.source.modulus().expect("extension source");
        let at_image = poly::eval_in(&self.target, g, &self.generator_image, |c| self.embed_base(c));
        if !self.target.is_zero(&at_image) {
            report.push("root", vec![], format!("modulus evaluated at generator image is {at_image}, not 0"));
            return report;
        }
        if !self.target.is_one(&self.apply(&self.source.one())) {
            report.push("unital", vec![], "1 is not mapped to 1");
        }
        let n = self.source.degree();
        let basis: Vec<Elem> = (0..n).map(|i| self.source.pow(&self.source.generator().unwrap(), i as u64)).collect();
        for i in 0..n {
            for j in 0..n {
                let (a, b) = (&basis[i], &basis[j]);
                let prod = self.apply(&self.source.mul(a, b));
                let prod_img = self.target.mul(&self.apply(a), &self.apply(b));
                if prod != prod_img {
                    report.push("multiplicative", vec![i, j], "h(ab) != h(a)h(b)");
                }
                let sum = self.apply(&self.source.add(a, b));
                let sum_img = self.target.add(&self.apply(a), &self.apply(b));
                if sum != sum_img {
                    report.push("additive", vec![i, j], "h(a+b) != h(a)+h(b)");
                }
            }
        }
        report
    }
}

fn target_contains_base(target: &Field, base: &Field) -> bool {
    target == base || target.base() == Some(base)
}

/// Free-function form of [`FieldHom::verify`].
pub fn verify_field_hom(h: &FieldHom) -> ValidationReport {
    h.verify()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Elem {
        Field::Rational.from_i64(n)
    }

    #[test]
    fn frobenius_on_gf4_is_a_hom() {
        let gf4 = Field::extension_int(Field::prime(2).unwrap(), &[1, 1, 1]).unwrap();
        let x = gf4.generator().unwrap();
        let h = FieldHom::new(gf4.clone(), gf4.clone(), gf4.mul(&x, &x)).unwrap();
        assert!(h.verify().is_ok());
        // Frobenius squared is the identity on GF(4)
        let hh = h.compose(&h).unwrap();
        assert_eq!(hh.generator_image, x);
    }

    #[test]
    fn conjugation_of_sqrt2() {
        let f = Field::extension_int(Field::Rational, &[-2, 0, 1]).unwrap();
        let h = FieldHom::new(f.clone(), f.clone(), Elem::Ext(vec![q(0), q(-1)])).unwrap();
        assert!(h.verify().is_ok());
    }

    #[test]
    fn shift_is_not_a_hom() {
        let f = Field::extension_int(Field::Rational, &[-2, 0, 1]).unwrap();
        let h = FieldHom::new(f.clone(), f.clone(), Elem::Ext(vec![q(1), q(1)])).unwrap();
        let r = h.verify();
        assert!(r.has("root"));
        // (x+1)^2 - 2 = x^2 + 2x - 1 = 2x + 1 mod x^2 - 2
        assert!(r.violations[0].detail.contains("[1, 2]"));
    }

    #[test]
    fn mismatched_base_rejected() {
        let f = Field::extension_int(Field::Rational, &[-2, 0, 1]).unwrap();
        let g = Field::prime(3).unwrap();
        assert!(FieldHom::new(f, g, Elem::P(1)).is_err());
    }
}
