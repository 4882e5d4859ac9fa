//! Definition files: a JSON document describing a field, a groupoid and
//! either a crossed system or a graded algebra.
//!
//! Scalars are strings (`"3"`, `"-1/2"`); elements of an extension field
//! are ascending coefficient lists. Loading resolves every cross-reference
//! but checks no axioms; see the `validate` verb for that.

use crate::algebra::{AlgebraError, StructureConstantAlgebra};
use crate::corpus::Example;
use crate::crossed::{CrossedError, CrossedSystem};
use crate::graded::{GradedAlgebra, GradedError};
use crate::groupoid::{FiniteGroupoid, GroupoidError};
use crate::scalar::{Elem, Field, Matrix, ScalarError};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

pub const DOCUMENT_VERSION: &str = "gcross/1";

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DocumentError {
    #[error("malformed document: {0}")]
    Syntax(String),
    #[error("unsupported version {0:?}")]
    Version(String),
    #[error("{0}")]
    Reference(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Groupoid(#[from] GroupoidError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Graded(#[from] GradedError),
    #[error(transparent)]
    Crossed(#[from] CrossedError),
}

/// A scalar as written in a file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarValue {
    Atom(String),
    Poly(Vec<ScalarValue>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum FieldBlock {
    Rational,
    Prime { p: u64 },
    Extension { base: Box<FieldBlock>, modulus: Vec<ScalarValue> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum GroupoidBlock {
    Explicit {
        labels: Vec<String>,
        inv: Vec<usize>,
        src: Vec<usize>,
        dst: Vec<usize>,
        /// Triples `[σ, τ, στ]`.
        comp: Vec<[usize; 3]>,
    },
    Pair {
        n: usize,
    },
    Group {
        table: Vec<Vec<usize>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<String>>,
    },
    Union {
        parts: Vec<GroupoidBlock>,
    },
}

/// Structure constants `b_i b_j = Σ c b_k` as entries `[i, j, k, c]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraBlock {
    pub dim: usize,
    pub products: Vec<(usize, usize, usize, ScalarValue)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<Vec<ScalarValue>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberBlock {
    pub object: usize,
    #[serde(flatten)]
    pub algebra: AlgebraBlock,
}

/// `α_σ` as a matrix: rows index the basis of the target fiber.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionBlock {
    pub arrow: usize,
    pub rows: Vec<Vec<ScalarValue>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CocycleBlock {
    pub arrows: [usize; 2],
    pub value: Vec<ScalarValue>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemBlock {
    pub fibers: Vec<FiberBlock>,
    /// One entry per arrow; arrows left out act by the identity.
    pub action: Vec<ActionBlock>,
    /// Entries left out are 1.
    #[serde(default)]
    pub cocycle: Vec<CocycleBlock>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedBlock {
    pub degrees: Vec<usize>,
    #[serde(flatten)]
    pub algebra: AlgebraBlock,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Assertions {
    /// Operator assertion that the extension modulus is irreducible, used
    /// when no certificate can be computed.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub irreducible: Option<bool>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Metadata {
    pub name: String,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub description: String,
    #[serde(default)]
    pub assertions: Assertions,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DefinitionDocument {
    pub version: String,
    pub metadata: Metadata,
    pub field: FieldBlock,
    pub groupoid: GroupoidBlock,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub system: Option<SystemBlock>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graded: Option<GradedBlock>,
}

/// The resolved content of a document, before any axiom check.
#[derive(Clone, Debug)]
pub enum Loaded {
    System {
        groupoid: FiniteGroupoid,
        fibers: BTreeMap<usize, StructureConstantAlgebra>,
        action: Vec<Matrix>,
        cocycle: BTreeMap<(usize, usize), Vec<Elem>>,
    },
    Graded {
        groupoid: FiniteGroupoid,
        algebra: StructureConstantAlgebra,
        degrees: Vec<usize>,
    },
}

impl FieldBlock {
    pub fn to_field(&self) -> Result<Field, DocumentError> {
        Ok(match self {
            FieldBlock::Rational => Field::Rational,
            FieldBlock::Prime { p } => Field::prime(*p)?,
            FieldBlock::Extension { base, modulus } => {
                let base = base.to_field()?;
                let m = modulus.iter().map(|c| c.to_elem(&base)).collect::<Result<_, _>>()?;
                Field::extension(base, m)?
            }
        })
    }

    pub fn from_field(f: &Field) -> Self {
        match f {
            Field::Rational => FieldBlock::Rational,
            Field::Prime(p) => FieldBlock::Prime { p: *p },
            Field::Extension(e) => FieldBlock::Extension {
                base: Box::new(FieldBlock::from_field(&e.base)),
                modulus: e.modulus.iter().map(ScalarValue::from_elem).collect(),
            },
        }
    }
}

impl ScalarValue {
    pub fn to_elem(&self, f: &Field) -> Result<Elem, DocumentError> {
        match (self, f) {
            (ScalarValue::Atom(s), _) => Ok(f.parse_scalar(s)?),
            (ScalarValue::Poly(cs), Field::Extension(e)) => {
                if cs.len() > f.degree() {
                    return Err(DocumentError::Reference(format!("element has {} coefficients, field degree is {}", cs.len(), f.degree())));
                }
                let mut v = cs.iter().map(|c| c.to_elem(&e.base)).collect::<Result<Vec<_>, _>>()?;
                v.resize(f.degree(), e.base.zero());
                Ok(f.from_coeffs(v))
            }
            (ScalarValue::Poly(_), _) => Err(DocumentError::Reference(format!("coefficient list given for a scalar of {f}"))),
        }
    }

    pub fn from_elem(a: &Elem) -> Self {
        match a {
            Elem::Ext(cs) => ScalarValue::Poly(cs.iter().map(ScalarValue::from_elem).collect()),
            _ => ScalarValue::Atom(Field::format_scalar(a)),
        }
    }
}

fn vector(f: &Field, v: &[ScalarValue]) -> Result<Vec<Elem>, DocumentError> {
    v.iter().map(|c| c.to_elem(f)).collect()
}

fn vector_block(v: &[Elem]) -> Vec<ScalarValue> {
    v.iter().map(ScalarValue::from_elem).collect()
}

impl GroupoidBlock {
    pub fn to_groupoid(&self) -> Result<FiniteGroupoid, DocumentError> {
        Ok(match self {
            GroupoidBlock::Explicit { labels, inv, src, dst, comp } => {
                FiniteGroupoid::from_tables(labels.clone(), inv.clone(), src.clone(), dst.clone(), comp.iter().map(|&[s, t, c]| (s, t, c)))?
            }
            GroupoidBlock::Pair { n } => FiniteGroupoid::pair(*n)?,
            GroupoidBlock::Group { table, labels } => FiniteGroupoid::group(table, labels.clone())?,
            GroupoidBlock::Union { parts } => {
                let parts = parts.iter().map(|p| p.to_groupoid()).collect::<Result<Vec<_>, _>>()?;
                FiniteGroupoid::disjoint_union(&parts)?
            }
        })
    }

    pub fn from_groupoid(g: &FiniteGroupoid) -> Self {
        GroupoidBlock::Explicit {
            labels: g.labels().to_vec(),
            inv: g.arrows().map(|s| g.inv(s)).collect(),
            src: g.arrows().map(|s| g.src(s)).collect(),
            dst: g.arrows().map(|s| g.dst(s)).collect(),
            comp: g.composition_table().iter().map(|(&(s, t), &c)| [s, t, c]).collect(),
        }
    }
}

impl AlgebraBlock {
    pub fn to_algebra(&self, f: &Field) -> Result<StructureConstantAlgebra, DocumentError> {
        let products =
            self.products.iter().map(|(i, j, k, c)| Ok((*i, *j, *k, c.to_elem(f)?))).collect::<Result<Vec<_>, DocumentError>>()?;
        let unit = self.unit.as_ref().map(|u| vector(f, u)).transpose()?;
        Ok(StructureConstantAlgebra::from_sparse(f.clone(), self.dim, products, unit)?)
    }

    pub fn from_algebra(a: &StructureConstantAlgebra) -> Self {
        Self {
            dim: a.dim(),
            products: a.constants().map(|(i, j, k, c)| (i, j, k, ScalarValue::from_elem(c))).collect(),
            unit: a.unit().map(vector_block),
        }
    }
}

impl DefinitionDocument {
    pub fn parse(text: &str) -> Result<Self, DocumentError> {
        let doc: Self = serde_json::from_str(text).map_err(|e| DocumentError::Syntax(e.to_string()))?;
        if doc.version != DOCUMENT_VERSION {
            return Err(DocumentError::Version(doc.version));
        }
        match (&doc.system, &doc.graded) {
            (Some(_), None) | (None, Some(_)) => Ok(doc),
            _ => Err(DocumentError::Syntax("exactly one of \"system\" and \"graded\" is required".into())),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data") + "\n"
    }

    pub fn from_system(name: &str, sys: &CrossedSystem) -> Self {
        let g = sys.groupoid();
        let fibers = sys.fibers().iter().map(|(&e, a)| FiberBlock { object: e, algebra: AlgebraBlock::from_algebra(a) }).collect();
        let action =
            g.arrows().map(|s| ActionBlock { arrow: s, rows: sys.action(s).to_rows().iter().map(|r| vector_block(r)).collect() }).collect();
        let cocycle = sys
            .cocycle()
            .iter()
            .filter(|(&(s, _), v)| Some(v.as_slice()) != sys.target_fiber(s).unit())
            .map(|(&(s, t), v)| CocycleBlock { arrows: [s, t], value: vector_block(v) })
            .collect();
        Self {
            version: DOCUMENT_VERSION.into(),
            metadata: Metadata { name: name.into(), ..Metadata::default() },
            field: FieldBlock::from_field(sys.field()),
            groupoid: GroupoidBlock::from_groupoid(g),
            system: Some(SystemBlock { fibers, action, cocycle }),
            graded: None,
        }
    }

    pub fn from_graded(name: &str, r: &GradedAlgebra) -> Self {
        Self {
            version: DOCUMENT_VERSION.into(),
            metadata: Metadata { name: name.into(), ..Metadata::default() },
            field: FieldBlock::from_field(r.field()),
            groupoid: GroupoidBlock::from_groupoid(r.groupoid()),
            system: None,
            graded: Some(GradedBlock { degrees: r.degrees().to_vec(), algebra: AlgebraBlock::from_algebra(r.algebra()) }),
        }
    }

    pub fn from_example(name: &str, ex: &Example) -> Self {
        match ex {
            Example::Crossed(cp) => Self::from_system(name, cp.system()),
            Example::Graded(r) => Self::from_graded(name, r),
        }
    }

    /// Resolves every block. Fails on dangling indices and shape errors, not
    /// on axiom violations.
    pub fn load(&self) -> Result<Loaded, DocumentError> {
        let f = self.field.to_field()?;
        let groupoid = self.groupoid.to_groupoid()?;
        if let Some(sys) = &self.system {
            let objects = groupoid.objects();
            let mut fibers = BTreeMap::new();
            for fb in &sys.fibers {
                if !objects.contains(&fb.object) {
                    return Err(DocumentError::Reference(format!("fiber given at {}, which is not an object", fb.object)));
                }
                if fibers.insert(fb.object, fb.algebra.to_algebra(&f)?).is_some() {
                    return Err(DocumentError::Reference(format!("two fibers at object {}", fb.object)));
                }
            }
            if let Some(e) = objects.iter().find(|e| !fibers.contains_key(e)) {
                return Err(DocumentError::Reference(format!("no fiber at object {e}")));
            }
            let fiber_at = |s: usize, target: bool| {
                let e = if target { groupoid.dst(s) } else { groupoid.src(s) };
                fibers.get(&e).map(|a| a.dim()).unwrap_or(0)
            };
            let mut action: Vec<Option<Matrix>> = vec![None; groupoid.len()];
            for ab in &sys.action {
                if ab.arrow >= groupoid.len() {
                    return Err(DocumentError::Reference(format!("action given at unknown arrow {}", ab.arrow)));
                }
                let cols = fiber_at(ab.arrow, false);
                let rows = ab.rows.iter().map(|r| vector(&f, r)).collect::<Result<Vec<_>, _>>()?;
                if rows.len() != fiber_at(ab.arrow, true) || rows.iter().any(|r| r.len() != cols) {
                    return Err(DocumentError::Reference(format!("action at arrow {} has the wrong shape", ab.arrow)));
                }
                if action[ab.arrow].replace(Matrix::from_rows(cols, rows)?).is_some() {
                    return Err(DocumentError::Reference(format!("two actions at arrow {}", ab.arrow)));
                }
            }
            let action = action
                .into_iter()
                .enumerate()
                .map(|(s, m)| match m {
                    Some(m) => Ok(m),
                    None if fiber_at(s, true) == fiber_at(s, false) => Ok(Matrix::identity(&f, fiber_at(s, true))),
                    None => Err(DocumentError::Reference(format!("no action at arrow {s}"))),
                })
                .collect::<Result<Vec<_>, _>>()?;
            let mut cocycle = BTreeMap::new();
            for cb in &sys.cocycle {
                let [s, t] = cb.arrows;
                if s >= groupoid.len() || t >= groupoid.len() {
                    return Err(DocumentError::Reference(format!("cocycle given at unknown arrows ({s}, {t})")));
                }
                if cocycle.insert((s, t), vector(&f, &cb.value)?).is_some() {
                    return Err(DocumentError::Reference(format!("two cocycle values at ({s}, {t})")));
                }
            }
            Ok(Loaded::System { groupoid, fibers, action, cocycle })
        } else {
            let gb = self.graded.as_ref().expect("checked at parse");
            let algebra = gb.algebra.to_algebra(&f)?;
            if gb.degrees.len() != algebra.dim() || gb.degrees.iter().any(|&d| d >= groupoid.len()) {
                return Err(DocumentError::Reference("degrees must name one arrow per basis vector".into()));
            }
            Ok(Loaded::Graded { groupoid, algebra, degrees: gb.degrees.clone() })
        }
    }
}
