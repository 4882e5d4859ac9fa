//! Built-in examples and bundled field-tower data.

use crate::algebra::{AlgebraError, StructureConstantAlgebra};
use crate::crossed::{CrossedError, CrossedProduct, CrossedSystem};
use crate::graded::{GradedAlgebra, GradedError};
use crate::groupoid::{FiniteGroupoid, GroupoidError};
use crate::report::ValidationReport;
use crate::scalar::{is_prime, poly_irreducible, Elem, Field, FieldHom, Irreducibility, Matrix, ScalarError, Subfield};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

pub const CBRT2_DATA: &str = include_str!("../data/cbrt2.json");
pub const KLEIN_GALOIS_DATA: &str = include_str!("../data/klein-galois.json");

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CorpusError {
    #[error("unknown example {0:?}")]
    UnknownExample(String),
    #[error("bad parameter: {0}")]
    Parameter(String),
    #[error("bundled data {name} is invalid: {detail}")]
    BadData { name: String, detail: String },
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Groupoid(#[from] GroupoidError),
    #[error(transparent)]
    Graded(#[from] GradedError),
    #[error(transparent)]
    Crossed(#[from] CrossedError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutomorphismData {
    pub label: String,
    pub image: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubfieldData {
    pub label: String,
    pub basis: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowData {
    pub target: usize,
    pub source: usize,
    pub automorphism: usize,
}

/// A splitting field `N = ℚ[x]/(g)`, its automorphisms, subfields given by
/// spanning sets, and the arrows of an isomorphism groupoid between them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldTowerData {
    pub name: String,
    pub notes: Vec<String>,
    pub modulus: Vec<String>,
    pub automorphisms: Vec<AutomorphismData>,
    pub subfields: Vec<SubfieldData>,
    pub arrows: Vec<ArrowData>,
}

/// Tower data after every check has passed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifiedTower {
    pub data: FieldTowerData,
    pub field: Field,
    pub irreducibility: Irreducibility,
    pub automorphisms: Vec<FieldHom>,
    pub subfields: Vec<Subfield>,
    /// Restriction matrix of each arrow (columns are images of the source
    /// basis in target coordinates).
    pub matrices: Vec<Matrix>,
    /// Number of pairs (automorphism, source subfield) whose image is one of
    /// the declared subfields.
    pub restriction_count: usize,
    pub groupoid: FiniteGroupoid,
}

impl FieldTowerData {
    pub fn parse(text: &str) -> Result<Self, CorpusError> {
        serde_json::from_str(text).map_err(|e| CorpusError::BadData { name: "tower".into(), detail: e.to_string() })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data") + "\n"
    }

    /// Re-validates everything: modulus, automorphisms, subfield closure,
    /// restrictions, uniqueness of the isomorphism per arrow, and the
    /// groupoid axioms.
    pub fn verify(&self) -> Result<VerifiedTower, CorpusError> {
        let bad = |detail: String| CorpusError::BadData { name: self.name.clone(), detail };
        let q = Field::Rational;
        let modulus: Vec<Elem> = self.modulus.iter().map(|c| q.parse_scalar(c)).collect::<Result<_, _>>()?;
        let irreducibility = poly_irreducible(&q, &modulus)?;
        if irreducibility == Irreducibility::No {
            return Err(bad("modulus is reducible".into()));
        }
        let field = Field::extension(q, modulus)?;
        let elem = |cs: &[String]| -> Result<Elem, CorpusError> {
            let cs: Vec<Elem> = cs.iter().map(|c| Field::Rational.parse_scalar(c)).collect::<Result<_, _>>()?;
            if cs.len() != field.degree() {
                return Err(CorpusError::BadData { name: self.name.clone(), detail: "element of the wrong length".into() });
            }
            Ok(field.from_coeffs(cs))
        };
        let mut automorphisms = Vec::new();
        for a in &self.automorphisms {
            let h = FieldHom::new(field.clone(), field.clone(), elem(&a.image)?)?;
            let rep = h.verify();
            if !rep.is_ok() {
                return Err(bad(format!("automorphism {} fails: {rep}", a.label)));
            }
            automorphisms.push(h);
        }
        let mut subfields = Vec::new();
        for s in &self.subfields {
            let basis = s.basis.iter().map(|b| elem(b)).collect::<Result<Vec<_>, _>>()?;
            let sub = Subfield::new(field.clone(), basis)?;
            let rep = sub.verify();
            if !rep.is_ok() {
                return Err(bad(format!("subfield {} fails: {rep}", s.label)));
            }
            subfields.push(sub);
        }
        let mut matrices = Vec::new();
        for (k, a) in self.arrows.iter().enumerate() {
            let (Some(t), Some(s), Some(h)) = (subfields.get(a.target), subfields.get(a.source), automorphisms.get(a.automorphism)) else {
                return Err(bad(format!("arrow {k} has a dangling reference")));
            };
            let cols = s
                .restriction_matrix(h, t)
                .ok_or_else(|| bad(format!("arrow {k}: automorphism does not map the source into the target")))?;
            matrices.push(Matrix::from_columns(t.dim(), &cols)?);
        }
        // every automorphism mapping one declared subfield into another
        // restricts to the declared arrow between them
        let mut restriction_count = 0;
        for h in &automorphisms {
            for (si, s) in subfields.iter().enumerate() {
                for (ti, t) in subfields.iter().enumerate() {
                    let Some(cols) = s.restriction_matrix(h, t) else { continue };
                    restriction_count += 1;
                    let m = Matrix::from_columns(t.dim(), &cols)?;
                    let declared: Vec<usize> = (0..self.arrows.len())
                        .filter(|&k| self.arrows[k].target == ti && self.arrows[k].source == si && matrices[k] == m)
                        .collect();
                    if declared.len() != 1 {
                        return Err(bad(format!("restriction from {si} to {ti} matches {} arrows", declared.len())));
                    }
                }
            }
        }
        let groupoid = self.groupoid_from_matrices(&matrices).map_err(|e| bad(e.to_string()))?;
        Ok(VerifiedTower { data: self.clone(), field, irreducibility, automorphisms, subfields, matrices, restriction_count, groupoid })
    }

    fn groupoid_from_matrices(&self, m: &[Matrix]) -> Result<FiniteGroupoid, GroupoidError> {
        let q = Field::Rational;
        let n = self.arrows.len();
        let arrow_with = |t: usize, s: usize, mat: &Matrix| -> Option<usize> {
            (0..n).find(|&k| self.arrows[k].target == t && self.arrows[k].source == s && &m[k] == mat)
        };
        let identity = |i: usize| -> Option<usize> {
            let dim = m.iter().zip(&self.arrows).find(|(_, a)| a.target == i).map(|(x, _)| x.rows)?;
            arrow_with(i, i, &Matrix::identity(&q, dim))
        };
        let mut src = Vec::with_capacity(n);
        let mut dst = Vec::with_capacity(n);
        let mut inv = Vec::with_capacity(n);
        let mut comp = Vec::new();
        for (k, a) in self.arrows.iter().enumerate() {
            let missing = |what: &str| GroupoidError::NotAGroup(format!("arrow {k} has no {what}"));
            src.push(identity(a.source).ok_or_else(|| missing("source identity"))?);
            dst.push(identity(a.target).ok_or_else(|| missing("target identity"))?);
            let i = (0..n)
                .find(|&l| {
                    self.arrows[l].target == a.source
                        && self.arrows[l].source == a.target
                        && m[k].mul(&q, &m[l]).map(|p| p.is_identity(&q)).unwrap_or(false)
                })
                .ok_or_else(|| missing("inverse"))?;
            inv.push(i);
            for (l, b) in self.arrows.iter().enumerate() {
                if a.source != b.target {
                    continue;
                }
                let prod = m[k].mul(&q, &m[l]).expect("composable shapes");
                let c = arrow_with(a.target, b.source, &prod).ok_or_else(|| missing("composite in the arrow set"))?;
                comp.push((k, l, c));
            }
        }
        let labels = self
            .arrows
            .iter()
            .map(|a| {
                if self.subfields.len() == 1 {
                    self.automorphisms[a.automorphism].label.clone()
                } else {
                    format!("{}<-{}", self.subfields[a.target].label, self.subfields[a.source].label)
                }
            })
            .collect();
        FiniteGroupoid::from_tables_checked(labels, inv, src, dst, comp)
    }
}

impl VerifiedTower {
    /// The crossed system with fibers the subfields, action the restricted
    /// isomorphisms, and trivial cocycle.
    pub fn crossed_system(&self) -> Result<CrossedSystem, CorpusError> {
        let g = &self.groupoid;
        let mut fibers = BTreeMap::new();
        for (k, a) in self.data.arrows.iter().enumerate() {
            if g.is_object(k) {
                fibers.insert(k, StructureConstantAlgebra::from_subfield(&self.subfields[a.target])?);
            }
        }
        Ok(CrossedSystem::skew(g.clone(), fibers, self.matrices.clone())?)
    }
}

pub fn cbrt2_tower() -> Result<VerifiedTower, CorpusError> {
    FieldTowerData::parse(CBRT2_DATA)?.verify()
}

pub fn klein_galois_tower() -> Result<VerifiedTower, CorpusError> {
    FieldTowerData::parse(KLEIN_GALOIS_DATA)?.verify()
}

/// Groupoid ring over the pair groupoid on `n` indices, checked against
/// the matrix-unit table.
pub fn gen_matrix(n: usize, field: &Field) -> Result<CrossedProduct, CorpusError> {
    if n == 0 {
        return Err(CorpusError::Parameter("matrix size must be at least 1".into()));
    }
    let k = StructureConstantAlgebra::matrix(field, 1)?;
    let sys = CrossedSystem::groupoid_ring(&k, FiniteGroupoid::pair(n)?)?;
    let cp = sys.build()?;
    let reference = StructureConstantAlgebra::matrix(field, n)?;
    if cp.algebra() != &reference {
        return Err(CorpusError::BadData {
            name: format!("matrix-{n}"),
            detail: "groupoid ring differs from the matrix-unit table".into(),
        });
    }
    Ok(cp)
}

/// First monic irreducible polynomial of degree `n` over `GF(p)` in
/// lexicographic order of the lower coefficients.
pub fn first_irreducible(p: u64, n: usize) -> Result<Vec<Elem>, CorpusError> {
    let f = Field::prime(p)?;
    let mut digits = vec![0u64; n];
    loop {
        let mut poly: Vec<Elem> = digits.iter().map(|&d| Elem::P(d)).collect();
        poly.push(f.one());
        if poly_irreducible(&f, &poly)? == Irreducibility::Yes {
            return Ok(poly);
        }
        let mut carry = true;
        for d in digits.iter_mut() {
            *d += 1;
            if *d < p {
                carry = false;
                break;
            }
            *d = 0;
        }
        if carry {
            return Err(CorpusError::Parameter(format!("no irreducible of degree {n} over GF({p})")));
        }
    }
}

/// `GF(pⁿ) ⋊ Cₙ` with Frobenius action and trivial cocycle, as a
/// `GF(p)`-algebra.
pub fn gen_finite_field_skew(p: u64, n: usize) -> Result<CrossedProduct, CorpusError> {
    if !is_prime(p) {
        return Err(CorpusError::Parameter(format!("{p} is not prime")));
    }
    if n == 0 {
        return Err(CorpusError::Parameter("degree must be at least 1".into()));
    }
    if (p as u128).checked_pow(n as u32).is_none_or(|q| q > 1 << 16) {
        return Err(CorpusError::Parameter(format!("{p}^{n} is too large")));
    }
    let base = Field::prime(p)?;
    let g = FiniteGroupoid::cyclic(n)?;
    if n == 1 {
        let k = StructureConstantAlgebra::matrix(&base, 1)?;
        return Ok(CrossedSystem::groupoid_ring(&k, g)?.build()?);
    }
    let ext = Field::extension(base.clone(), first_irreducible(p, n)?)?;
    let frob = FieldHom::new(ext.clone(), ext.clone(), ext.pow(&ext.generator().expect("extension"), p))?;
    let rep = frob.verify();
    if !rep.is_ok() {
        return Err(CorpusError::BadData { name: format!("ff-skew-{p}-{n}"), detail: format!("Frobenius fails: {rep}") });
    }
    let a = StructureConstantAlgebra::field_as_algebra(&ext)?;
    let x = ext.generator().expect("extension");
    let mut action = Vec::with_capacity(n);
    let mut h = FieldHom::new(ext.clone(), ext.clone(), x.clone())?;
    for _ in 0..n {
        let cols: Vec<Vec<Elem>> = (0..n).map(|j| ext.coeffs(&h.apply(&ext.pow(&x, j as u64)))).collect();
        action.push(Matrix::from_columns(n, &cols)?);
        h = frob.compose(&h)?;
    }
    let fibers = BTreeMap::from([(0, a)]);
    Ok(CrossedSystem::skew(g, fibers, action)?.build()?)
}

/// The quaternion cocycle on the Klein four group `{e, a, b, c}`: rows σ,
/// columns τ over `a, b, c`.
pub const QUATERNION_TABLE: [[i64; 3]; 3] = [[-1, 1, -1], [-1, -1, 1], [1, -1, -1]];

pub fn quaternion_system() -> Result<CrossedSystem, CorpusError> {
    let q = Field::Rational;
    let b = StructureConstantAlgebra::matrix(&q, 1)?;
    let mut cocycle = BTreeMap::new();
    for s in 1..4 {
        for t in 1..4 {
            cocycle.insert((s, t), vec![q.from_i64(QUATERNION_TABLE[s - 1][t - 1])]);
        }
    }
    Ok(CrossedSystem::twisted(&b, FiniteGroupoid::klein_four(), cocycle)?)
}

/// Rational quaternions as a twisted Klein-four ring.
pub fn gen_quaternion() -> Result<CrossedProduct, CorpusError> {
    Ok(quaternion_system()?.build()?)
}

pub fn gen_cbrt2() -> Result<CrossedProduct, CorpusError> {
    Ok(cbrt2_tower()?.crossed_system()?.build()?)
}

pub fn gen_klein_galois() -> Result<CrossedProduct, CorpusError> {
    Ok(klein_galois_tower()?.crossed_system()?.build()?)
}

/// Group ring `K[G]` of a one-object groupoid.
pub fn gen_group_ring(field: &Field, group: FiniteGroupoid) -> Result<CrossedProduct, CorpusError> {
    let k = StructureConstantAlgebra::matrix(field, 1)?;
    Ok(CrossedSystem::groupoid_ring(&k, group)?.build()?)
}

/// `ℚ[x]/(x²)` graded by `C₂` with `x` of degree `g`.
pub fn gen_non_strong() -> Result<GradedAlgebra, CorpusError> {
    let q = Field::Rational;
    let a = StructureConstantAlgebra::from_sparse(q.clone(), 2, [(0, 0, 0, q.one()), (0, 1, 1, q.one()), (1, 0, 1, q.one())], None)?;
    Ok(GradedAlgebra::new(FiniteGroupoid::cyclic(2)?, a, vec![0, 1])?)
}

/// `M₂(ℚ)` graded by the union of the pair groupoid on two indices and
/// `C₂`; the `C₂` object has a zero fiber.
pub fn gen_zero_fiber() -> Result<GradedAlgebra, CorpusError> {
    let q = Field::Rational;
    let g = FiniteGroupoid::disjoint_union(&[FiniteGroupoid::pair(2)?, FiniteGroupoid::cyclic(2)?])?;
    let a = StructureConstantAlgebra::matrix(&q, 2)?;
    Ok(GradedAlgebra::new(g, a, (0..4).collect())?)
}

/// A named corpus entry.
#[derive(Clone, Debug, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum Example {
    Crossed(CrossedProduct),
    Graded(GradedAlgebra),
}

impl Example {
    pub fn graded(&self) -> &GradedAlgebra {
        match self {
            Example::Crossed(cp) => cp.graded(),
            Example::Graded(g) => g,
        }
    }
}

/// Every name accepted by [`example`], with parameters shown as `n`, `p`.
pub const EXAMPLE_NAMES: &[&str] = &[
    "matrix-n",
    "matrix-n-gf2",
    "ff-skew-p-n",
    "quaternion",
    "cbrt2",
    "klein-galois",
    "non-strong",
    "gf2-c2",
    "gf3-c3",
    "q-cn",
    "q-klein",
    "zero-fiber",
];

fn parse_usize(s: &str, name: &str) -> Result<usize, CorpusError> {
    s.parse().map_err(|_| CorpusError::UnknownExample(name.to_string()))
}

/// Looks up a corpus entry by name, e.g. `matrix-3`, `ff-skew-2-2`, `q-c4`.
pub fn example(name: &str) -> Result<Example, CorpusError> {
    let q = Field::Rational;
    let parts: Vec<&str> = name.split('-').collect();
    let cp = match parts.as_slice() {
        ["matrix", n] => gen_matrix(parse_usize(n, name)?, &q)?,
        ["matrix", n, "gf2"] => gen_matrix(parse_usize(n, name)?, &Field::prime(2)?)?,
        ["ff", "skew", p, n] => gen_finite_field_skew(parse_usize(p, name)? as u64, parse_usize(n, name)?)?,
        ["quaternion"] => gen_quaternion()?,
        ["cbrt2"] => gen_cbrt2()?,
        ["klein", "galois"] => gen_klein_galois()?,
        ["gf2", "c2"] => gen_group_ring(&Field::prime(2)?, FiniteGroupoid::cyclic(2)?)?,
        ["gf3", "c3"] => gen_group_ring(&Field::prime(3)?, FiniteGroupoid::cyclic(3)?)?,
        ["q", "klein"] => gen_group_ring(&q, FiniteGroupoid::klein_four())?,
        ["q", c] if c.starts_with('c') => {
            let n = parse_usize(&c[1..], name)?;
            if n == 0 {
                return Err(CorpusError::Parameter("cyclic order must be at least 1".into()));
            }
            gen_group_ring(&q, FiniteGroupoid::cyclic(n)?)?
        }
        ["non", "strong"] => return Ok(Example::Graded(gen_non_strong()?)),
        ["zero", "fiber"] => return Ok(Example::Graded(gen_zero_fiber()?)),
        _ => return Err(CorpusError::UnknownExample(name.to_string())),
    };
    Ok(Example::Crossed(cp))
}

/// Validation report for a bundled tower, empty when it loads.
pub fn check_bundled_data() -> ValidationReport {
    let mut r = ValidationReport::new();
    for (name, text) in [("cbrt2", CBRT2_DATA), ("klein-galois", KLEIN_GALOIS_DATA)] {
        match FieldTowerData::parse(text).and_then(|d| d.verify()) {
            Ok(_) => {}
            Err(e) => r.push("bundled-data", vec![], format!("{name}: {e}")),
        }
    }
    r
}
