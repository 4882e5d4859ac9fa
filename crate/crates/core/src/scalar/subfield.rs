//! Subfields of an extension given by explicit spanning sets over the base.
//! Closure is verified, never inferred.

use super::{linalg::RowSpace, Elem, Field, FieldHom, ScalarError};
use crate::report::ValidationReport;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subfield {
    pub ambient: Field,
    pub basis: Vec<Elem>,
}

impl Subfield {
    pub fn new(ambient: Field, basis: Vec<Elem>) -> Result<Self, ScalarError> {
        if ambient.base().is_none() {
            return Err(ScalarError::SpecMismatch(format!("{ambient} is not an extension")));
        }
        for b in &basis {
            ambient.check(b)?;
        }
        Ok(Self { ambient, basis })
    }

    pub fn base(&self) -> &Field {
        self.ambient.base().expect("checked at construction")
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    fn span(&self) -> RowSpace {
        let mut rs = RowSpace::new(self.base(), self.ambient.degree() + self.dim());
        // augmented with an identity block to recover coordinates
        for (i, b) in self.basis.iter().enumerate() {
            let mut row = self.ambient.coeffs(b);
            for j in 0..self.dim() {
                row.push(if i == j { self.base().one() } else { self.base().zero() });
            }
            rs.insert(&row);
        }
        rs
    }

    /// Coordinates of `a` in the spanning basis, or `None` if `a` is not in
    /// the span. Assumes the basis is independent (see [`verify`](Self::verify)).
    pub fn coordinates(&self, a: &Elem) -> Option<Vec<Elem>> {
        let n = self.ambient.degree();
        let rs = self.span();
        let mut row = self.ambient.coeffs(a);
        row.extend((0..self.dim()).map(|_| self.base().zero()));
        let red = rs.reduce(&row);
        if red[..n].iter().any(|c| !self.base().is_zero(c)) {
            return None;
        }
        // a - sum c_i b_i reduces to zero; the identity block holds -c
        Some(red[n..].iter().map(|c| self.base().neg(c)).collect())
    }

    pub fn verify(&self) -> ValidationReport {
        let mut report = ValidationReport::new();
        let n = self.ambient.degree();
        let rs = self.span();
        let independent = rs.basis().iter().filter(|r| r[..n].iter().any(|c| !self.base().is_zero(c))).count();
        if independent != self.dim() {
            report.push("independent", vec![], "spanning set is linearly dependent");
            return report;
        }
        if self.coordinates(&self.ambient.one()).is_none() {
            report.push("unit", vec![], "1 is not in the span");
        }
        for i in 0..self.dim() {
            for j in i..self.dim() {
                let p = self.ambient.mul(&self.basis[i], &self.basis[j]);
                if self.coordinates(&p).is_none() {
                    report.push("closure", vec![i, j], "product leaves the span");
                }
            }
        }
        report
    }

    /// Structure constants `b_i b_j = sum_k c[i][j][k] b_k`.
    pub fn structure_constants(&self) -> Vec<Vec<Vec<Elem>>> {
        (0..self.dim())
            .map(|i| {
                (0..self.dim())
                    .map(|j| {
                        let p = self.ambient.mul(&self.basis[i], &self.basis[j]);
                        self.coordinates(&p).expect("closure verified")
                    })
                    .collect()
            })
            .collect()
    }

    /// Matrix (as columns) of `h` restricted to `self`, landing in `target`;
    /// `None` if some image leaves `target`.
    pub fn restriction_matrix(&self, h: &FieldHom, target: &Subfield) -> Option<Vec<Vec<Elem>>> {
        self.basis.iter().map(|b| target.coordinates(&h.apply(b))).collect()
    }
}
