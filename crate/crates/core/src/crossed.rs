//! Crossed systems `(A, G, α, β)` and their crossed products.

use crate::algebra::{AlgebraError, StructureConstantAlgebra};
use crate::graded::{GradedAlgebra, GradedError, ObjectUnits};
use crate::groupoid::FiniteGroupoid;
use crate::report::ValidationReport;
use crate::scalar::{rank, vector, Elem, Field, Matrix};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CrossedError {
    #[error("shape error: {0}")]
    Shape(String),
    #[error("invalid crossed system:\n{0}")]
    Invalid(ValidationReport),
    #[error("cocycle value at ({0}, {1}) is not central")]
    NotCentral(usize, usize),
    #[error("element for arrow {0} is not invertible")]
    NotInvertible(usize),
    #[error("u at object {0} is not the object unit")]
    NotObjectUnit(usize),
    #[error("isomorphism check failed at basis pair ({0}, {1})")]
    IsoFailure(usize, usize),
    #[error("R_{0} is not free of rank one over its fiber")]
    NotFree(usize),
    #[error(transparent)]
    Graded(#[from] GradedError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedSystem {
    groupoid: FiniteGroupoid,
    fibers: BTreeMap<usize, StructureConstantAlgebra>,
    action: Vec<Matrix>,
    cocycle: BTreeMap<(usize, usize), Vec<Elem>>,
}

impl CrossedSystem {
    /// Checks shapes only. Cocycle entries that are not given are set to 1;
    /// entries on non-composable pairs are rejected.
    pub fn new(
        groupoid: FiniteGroupoid,
        fibers: BTreeMap<usize, StructureConstantAlgebra>,
        action: Vec<Matrix>,
        cocycle: BTreeMap<(usize, usize), Vec<Elem>>,
    ) -> Result<Self, CrossedError> {
        let gr = groupoid.validate();
        if !gr.is_ok() {
            return Err(CrossedError::Shape(format!("groupoid is invalid:\n{gr}")));
        }
        let objects = groupoid.objects();
        if fibers.keys().copied().collect::<Vec<_>>() != objects {
            return Err(CrossedError::Shape("fibers must be given exactly at the objects".into()));
        }
        let field = fibers[&objects[0]].field().clone();
        for (e, a) in &fibers {
            if a.field() != &field {
                return Err(CrossedError::Shape(format!("fiber at {e} is over {} instead of {field}", a.field())));
            }
            if a.unit().is_none() {
                return Err(CrossedError::Shape(format!("fiber at {e} has no identity")));
            }
        }
        if action.len() != groupoid.len() {
            return Err(CrossedError::Shape(format!("{} action matrices for {} arrows", action.len(), groupoid.len())));
        }
        for (s, m) in action.iter().enumerate() {
            let (rows, cols) = (fibers[&groupoid.dst(s)].dim(), fibers[&groupoid.src(s)].dim());
            if m.rows != rows || m.cols != cols {
                return Err(CrossedError::Shape(format!("action at arrow {s} is {}x{}, expected {rows}x{cols}", m.rows, m.cols)));
            }
        }
        let mut full = BTreeMap::new();
        for (&(s, t), v) in &cocycle {
            if s >= groupoid.len() || t >= groupoid.len() || !groupoid.composable(s, t) {
                return Err(CrossedError::Shape(format!("cocycle given on non-composable pair ({s}, {t})")));
            }
            let a = &fibers[&groupoid.dst(s)];
            if v.len() != a.dim() {
                return Err(CrossedError::Shape(format!("cocycle value at ({s}, {t}) has wrong length")));
            }
        }
        for (s, t) in groupoid.composable_pairs() {
            let v = match cocycle.get(&(s, t)) {
                Some(v) => v.clone(),
                None => fibers[&groupoid.dst(s)].one()?,
            };
            full.insert((s, t), v);
        }
        Ok(Self { groupoid, fibers, action, cocycle: full })
    }

    pub fn groupoid(&self) -> &FiniteGroupoid {
        &self.groupoid
    }

    pub fn field(&self) -> &Field {
        self.fibers.values().next().expect("nonempty").field()
    }

    pub fn fiber(&self, e: usize) -> &StructureConstantAlgebra {
        &self.fibers[&e]
    }

    pub fn fibers(&self) -> &BTreeMap<usize, StructureConstantAlgebra> {
        &self.fibers
    }

    /// Fiber at the target of `s`, where coefficients of `u_s` live.
    pub fn target_fiber(&self, s: usize) -> &StructureConstantAlgebra {
        &self.fibers[&self.groupoid.dst(s)]
    }

    pub fn action(&self, s: usize) -> &Matrix {
        &self.action[s]
    }

    pub fn actions(&self) -> &[Matrix] {
        &self.action
    }

    pub fn alpha(&self, s: usize, a: &[Elem]) -> Vec<Elem> {
        self.action[s].mul_vec(self.field(), a).expect("shape checked")
    }

    pub fn beta(&self, s: usize, t: usize) -> &[Elem] {
        &self.cocycle[&(s, t)]
    }

    pub fn cocycle(&self) -> &BTreeMap<(usize, usize), Vec<Elem>> {
        &self.cocycle
    }

    /// Copy with one action matrix replaced; shapes must agree.
    pub fn with_action(&self, s: usize, m: Matrix) -> Self {
        assert_eq!((m.rows, m.cols), (self.action[s].rows, self.action[s].cols));
        let mut out = self.clone();
        out.action[s] = m;
        out
    }

    /// Copy with one cocycle value replaced.
    pub fn with_cocycle(&self, s: usize, t: usize, v: Vec<Elem>) -> Self {
        assert!(self.cocycle.contains_key(&(s, t)));
        let mut out = self.clone();
        out.cocycle.insert((s, t), v);
        out
    }

    /// Copy with one fiber replaced (same dimension).
    pub fn with_fiber(&self, e: usize, a: StructureConstantAlgebra) -> Self {
        assert_eq!(a.dim(), self.fibers[&e].dim());
        let mut out = self.clone();
        out.fibers.insert(e, a);
        out
    }

    /// Checks every axiom of a crossed system with witnesses.
    ///
    /// Checks: `fiber-associativity`, `fiber-unit`, `action-identity`,
    /// `action-multiplicative`, `action-unital`, `action-bijective`,
    /// `cocycle-invertible`, `cocycle-normalized`, `compatibility`,
    /// `cocycle-identity`.
    pub fn validate(&self) -> ValidationReport {
        let mut r = ValidationReport::new();
        let g = &self.groupoid;
        let f = self.field();
        for (&e, a) in &self.fibers {
            for v in a.validate().violations {
                let check = match v.check.as_str() {
                    "associativity" => "fiber-associativity",
                    _ => "fiber-unit",
                };
                let mut w = vec![e];
                w.extend(v.witness);
                r.push(check, w, v.detail);
            }
        }
        for &e in g.objects() {
            if !self.action[e].is_identity(f) {
                r.push("action-identity", vec![e], format!("alpha at object {} is not the identity", g.label(e)));
            }
        }
        for s in g.arrows() {
            let (src, dst) = (&self.fibers[&g.src(s)], &self.fibers[&g.dst(s)]);
            let one_src = src.one().expect("checked");
            let one_dst = dst.one().expect("checked");
            if self.alpha(s, &one_src) != one_dst {
                r.push("action-unital", vec![s], format!("alpha_{} does not preserve 1", g.label(s)));
            }
            if src.dim() != dst.dim() || rank(f, &self.action[s]) != src.dim() {
                r.push("action-bijective", vec![s], format!("alpha_{} is not bijective", g.label(s)));
            }
            'mult: for i in 0..src.dim() {
                let bi = src.basis_vector(i);
                let ai = self.alpha(s, &bi);
                for j in 0..src.dim() {
                    let bj = src.basis_vector(j);
                    let lhs = self.alpha(s, &src.mul(&bi, &bj));
                    let rhs = dst.mul(&ai, &self.alpha(s, &bj));
                    if lhs != rhs {
                        r.push("action-multiplicative", vec![s, i, j], format!("alpha_{}(b{i} b{j}) differs", g.label(s)));
                        break 'mult;
                    }
                }
            }
        }
        let mut invertible = BTreeMap::new();
        for (&(s, t), b) in &self.cocycle {
            let a = &self.fibers[&g.dst(s)];
            let ok = a.invert(b).is_some();
            invertible.insert((s, t), ok);
            if !ok {
                r.push("cocycle-invertible", vec![s, t], format!("beta({}, {}) is not a unit", g.label(s), g.label(t)));
            }
        }
        for s in g.arrows() {
            let a = &self.fibers[&g.dst(s)];
            let one = a.one().expect("checked");
            for (x, y) in [(s, g.src(s)), (g.dst(s), s)] {
                if self.cocycle[&(x, y)] != one {
                    r.push("cocycle-normalized", vec![x, y], format!("beta({}, {}) != 1", g.label(x), g.label(y)));
                }
            }
        }
        r.violations.dedup();
        for (s, t) in g.composable_pairs() {
            let st = g.compose(s, t).expect("composable");
            let a_dst = &self.fibers[&g.dst(s)];
            let a_src = &self.fibers[&g.src(t)];
            let b = &self.cocycle[&(s, t)];
            for i in 0..a_src.dim() {
                let x = a_src.basis_vector(i);
                let lhs = a_dst.mul(&self.alpha(s, &self.alpha(t, &x)), b);
                let rhs = a_dst.mul(b, &self.alpha(st, &x));
                if lhs != rhs {
                    r.push(
                        "compatibility",
                        vec![s, t, i],
                        format!("alpha_{}(alpha_{}(b{i})) beta != beta alpha_{}(b{i})", g.label(s), g.label(t), g.label(st)),
                    );
                }
            }
        }
        for (s, t, u) in g.composable_triples() {
            let st = g.compose(s, t).expect("composable");
            let tu = g.compose(t, u).expect("composable");
            let a = &self.fibers[&g.dst(s)];
            let lhs = a.mul(&self.cocycle[&(s, t)], &self.cocycle[&(st, u)]);
            let rhs = a.mul(&self.alpha(s, &self.cocycle[&(t, u)]), &self.cocycle[&(s, tu)]);
            if lhs != rhs {
                r.push(
                    "cocycle-identity",
                    vec![s, t, u],
                    format!("cocycle identity fails at ({}, {}, {})", g.label(s), g.label(t), g.label(u)),
                );
            }
        }
        r
    }

    /// Skew system: the given action with trivial cocycle.
    pub fn skew(
        groupoid: FiniteGroupoid,
        fibers: BTreeMap<usize, StructureConstantAlgebra>,
        action: Vec<Matrix>,
    ) -> Result<Self, CrossedError> {
        Self::new(groupoid, fibers, action, BTreeMap::new())
    }

    /// Twisted system over a single ring `b`: trivial action, cocycle valued
    /// in the center of `b`.
    pub fn twisted(
        b: &StructureConstantAlgebra,
        groupoid: FiniteGroupoid,
        cocycle: BTreeMap<(usize, usize), Vec<Elem>>,
    ) -> Result<Self, CrossedError> {
        for (&(s, t), v) in &cocycle {
            if v.len() != b.dim() {
                return Err(CrossedError::Shape(format!("cocycle value at ({s}, {t}) has wrong length")));
            }
            if !b.is_central(v) {
                return Err(CrossedError::NotCentral(s, t));
            }
        }
        let fibers = groupoid.objects().iter().map(|&e| (e, b.clone())).collect();
        let action = vec![Matrix::identity(b.field(), b.dim()); groupoid.len()];
        Self::new(groupoid, fibers, action, cocycle)
    }

    /// The groupoid ring `b[G]`.
    pub fn groupoid_ring(b: &StructureConstantAlgebra, groupoid: FiniteGroupoid) -> Result<Self, CrossedError> {
        Self::twisted(b, groupoid, BTreeMap::new())
    }

    /// Whether every cocycle value is 1.
    pub fn has_trivial_cocycle(&self) -> bool {
        self.cocycle.iter().all(|(&(s, _), v)| Some(v.as_slice()) == self.target_fiber(s).unit())
    }

    /// Whether all fibers coincide and every action matrix is the identity.
    pub fn has_trivial_action(&self) -> bool {
        let first = self.fibers.values().next().expect("nonempty");
        self.fibers.values().all(|a| a == first) && self.action.iter().all(|m| m.is_identity(self.field()))
    }

    /// Whether every cocycle value is central in its fiber.
    pub fn has_central_cocycle(&self) -> bool {
        self.cocycle.iter().all(|(&(s, _), v)| self.target_fiber(s).is_central(v))
    }

    pub fn build(&self) -> Result<CrossedProduct, CrossedError> {
        build_crossed_product(self)
    }
}

/// `A ⋊ G` with basis `b_i u_σ`, `b_i` running over the basis of `A_{r(σ)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedProduct {
    system: CrossedSystem,
    graded: GradedAlgebra,
    offsets: Vec<usize>,
}

/// Validates `sys`, builds its crossed product and checks associativity on
/// all basis triples.
pub fn build_crossed_product(sys: &CrossedSystem) -> Result<CrossedProduct, CrossedError> {
    let report = sys.validate();
    if !report.is_ok() {
        return Err(CrossedError::Invalid(report));
    }
    let cp = build_unchecked(sys)?;
    let assoc = cp.graded.algebra().validate();
    if !assoc.is_ok() {
        return Err(CrossedError::Invalid(assoc));
    }
    Ok(cp)
}

/// Builds the product table without validating the system first.
pub fn build_unchecked(sys: &CrossedSystem) -> Result<CrossedProduct, CrossedError> {
    let g = sys.groupoid();
    let f = sys.field().clone();
    let mut offsets = Vec::with_capacity(g.len());
    let mut degrees = Vec::new();
    let mut local = Vec::new();
    for s in g.arrows() {
        offsets.push(degrees.len());
        for i in 0..sys.target_fiber(s).dim() {
            degrees.push(s);
            local.push(i);
        }
    }
    let dim = degrees.len();
    let mut consts = Vec::new();
    for x in 0..dim {
        let (s, i) = (degrees[x], local[x]);
        let a = sys.target_fiber(s);
        let bi = a.basis_vector(i);
        for y in 0..dim {
            let (t, j) = (degrees[y], local[y]);
            let Some(st) = g.compose(s, t) else { continue };
            let bj = sys.target_fiber(t).basis_vector(j);
            let c = a.mul(&a.mul(&bi, &sys.alpha(s, &bj)), sys.beta(s, t));
            for (k, ck) in c.iter().enumerate() {
                if !f.is_zero(ck) {
                    consts.push((x, y, offsets[st] + k, ck.clone()));
                }
            }
        }
    }
    let mut unit = vector::zeros(&f, dim);
    for &e in g.objects() {
        let one = sys.fiber(e).one()?;
        for (k, c) in one.into_iter().enumerate() {
            unit[offsets[e] + k] = c;
        }
    }
    let algebra = StructureConstantAlgebra::from_sparse(f, dim, consts, Some(unit))?;
    let graded = GradedAlgebra::new(g.clone(), algebra, degrees)?;
    Ok(CrossedProduct { system: sys.clone(), graded, offsets })
}

impl CrossedProduct {
    pub fn system(&self) -> &CrossedSystem {
        &self.system
    }

    pub fn graded(&self) -> &GradedAlgebra {
        &self.graded
    }

    pub fn algebra(&self) -> &StructureConstantAlgebra {
        self.graded.algebra()
    }

    pub fn groupoid(&self) -> &FiniteGroupoid {
        self.system.groupoid()
    }

    pub fn field(&self) -> &Field {
        self.system.field()
    }

    pub fn dim(&self) -> usize {
        self.graded.dim()
    }

    pub fn offset(&self, s: usize) -> usize {
        self.offsets[s]
    }

    /// Global index of `b_i u_σ`.
    pub fn index(&self, s: usize, i: usize) -> usize {
        self.offsets[s] + i
    }

    /// The element `a u_σ`.
    pub fn element(&self, s: usize, a: &[Elem]) -> Vec<Elem> {
        let mut v = self.algebra().zero();
        for (k, c) in a.iter().enumerate() {
            v[self.offsets[s] + k] = c.clone();
        }
        v
    }

    /// The coefficient of `u_σ` in `r`, in `A_{r(σ)}`.
    pub fn coefficient(&self, r: &[Elem], s: usize) -> Vec<Elem> {
        let n = self.system.target_fiber(s).dim();
        r[self.offsets[s]..self.offsets[s] + n].to_vec()
    }

    /// The canonical `u_σ = 1 u_σ`.
    pub fn u(&self, s: usize) -> Vec<Elem> {
        self.element(s, &self.system.target_fiber(s).one().expect("unital fiber"))
    }

    /// `1_{R_e} = 1_{A_e} u_e`.
    pub fn object_units(&self) -> ObjectUnits {
        ObjectUnits { units: self.groupoid().objects().iter().map(|&e| (e, self.u(e))).collect() }
    }

    /// Object inverse of `u_σ`: `α_σ⁻¹(β_{σ,σ⁻¹}⁻¹) u_{σ⁻¹}`.
    pub fn u_inverse(&self, s: usize) -> Vec<Elem> {
        let g = self.groupoid();
        let si = g.inv(s);
        let a = self.system.target_fiber(s);
        let binv = a.invert(self.system.beta(s, si)).expect("validated cocycle");
        // α_σ⁻¹ = α_{σ⁻¹} conjugated by the cocycle; solve linearly instead
        let sol = crate::scalar::solve(self.field(), self.system.action(s), &binv).expect("square").expect("bijective action");
        self.element(si, &sol.particular)
    }

    /// Canonical section pair `(β_{σ,σ⁻¹}⁻¹ u_σ, u_{σ⁻¹})` with product
    /// `1_{R_{r(σ)}}`.
    pub fn canonical_section(&self, s: usize) -> (Vec<Elem>, Vec<Elem>) {
        let g = self.groupoid();
        let si = g.inv(s);
        let a = self.system.target_fiber(s);
        let binv = a.invert(self.system.beta(s, si)).expect("validated cocycle");
        (self.element(s, &binv), self.u(si))
    }

    /// Canonical units `σ ↦ u_σ`.
    pub fn canonical_units(&self) -> BTreeMap<usize, Vec<Elem>> {
        self.groupoid().arrows().map(|s| (s, self.u(s))).collect()
    }
}

/// Outcome of extracting a crossed system from a graded algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extraction {
    pub system: CrossedSystem,
    pub product: CrossedProduct,
    /// Matrix of `γ(r_σ) = (r_σ v_{σ⁻¹}) u_σ` from `R` to the product.
    pub iso: Matrix,
    /// `σ ↦ v_{σ⁻¹}`, the object inverse of `u_σ`.
    pub inverses: BTreeMap<usize, Vec<Elem>>,
}

/// Recovers `(A, G, α, β)` from object-invertible units and verifies that
/// `γ` is a degree-preserving ring isomorphism onto the rebuilt product.
pub fn extract_crossed_system(r: &GradedAlgebra, units: &BTreeMap<usize, Vec<Elem>>) -> Result<Extraction, CrossedError> {
    let g = r.groupoid().clone();
    let f = r.field().clone();
    let ounits = r.object_units()?;
    let mut inverses = BTreeMap::new();
    for s in g.arrows() {
        let u = units.get(&s).ok_or(CrossedError::NotInvertible(s))?;
        if g.is_object(s) && u.as_slice() != ounits.get(s) {
            return Err(CrossedError::NotObjectUnit(s));
        }
        let v = r.object_inverse(&ounits, u, s)?.ok_or(CrossedError::NotInvertible(s))?;
        inverses.insert(s, v);
    }
    let local = |s: usize, x: &[Elem]| -> Vec<Elem> { r.component(s).iter().map(|&i| x[i].clone()).collect() };
    let embed = |s: usize, a: &[Elem]| -> Vec<Elem> {
        let mut v = r.algebra().zero();
        for (l, &i) in r.component(s).iter().enumerate() {
            v[i] = a[l].clone();
        }
        v
    };
    let mut fibers = BTreeMap::new();
    for &e in g.objects() {
        fibers.insert(e, r.fiber_algebra(e)?);
    }
    // freeness: a ↦ a u_σ is injective from A_{r(σ)} onto R_σ
    for s in g.arrows() {
        let e = g.dst(s);
        let cols: Vec<Vec<Elem>> = r.component(e).iter().map(|&i| local(s, &r.mul(&r.algebra().basis_vector(i), &units[&s]))).collect();
        let m = Matrix::from_columns(r.component(s).len(), &cols).map_err(|_| CrossedError::NotFree(s))?;
        if r.component(s).len() != r.component(e).len() || rank(&f, &m) != r.component(e).len() {
            return Err(CrossedError::NotFree(s));
        }
    }
    let mut action = Vec::with_capacity(g.len());
    for t in g.arrows() {
        let d = g.src(t);
        let cols: Vec<Vec<Elem>> = r
            .component(d)
            .iter()
            .map(|&i| {
                let a = r.algebra().basis_vector(i);
                let img = r.mul(&r.mul(&units[&t], &a), &inverses[&t]);
                local(g.dst(t), &img)
            })
            .collect();
        action.push(Matrix::from_columns(r.component(g.dst(t)).len(), &cols).map_err(|e| CrossedError::Shape(e.to_string()))?);
    }
    let mut cocycle = BTreeMap::new();
    for (s, t) in g.composable_pairs() {
        let st = g.compose(s, t).expect("composable");
        let b = r.mul(&r.mul(&units[&s], &units[&t]), &inverses[&st]);
        cocycle.insert((s, t), local(g.dst(s), &b));
    }
    let system = CrossedSystem::new(g.clone(), fibers, action, cocycle)?;
    let product = build_crossed_product(&system)?;
    let mut cols = Vec::with_capacity(r.dim());
    for i in 0..r.dim() {
        let s = r.degree(i);
        let x = r.algebra().basis_vector(i);
        let a = local(g.dst(s), &r.mul(&x, &inverses[&s]));
        cols.push(product.element(s, &a));
    }
    let iso = Matrix::from_columns(product.dim(), &cols).map_err(|e| CrossedError::Shape(e.to_string()))?;
    if product.dim() != r.dim() || rank(&f, &iso) != r.dim() {
        return Err(CrossedError::IsoFailure(0, 0));
    }
    for i in 0..r.dim() {
        for j in 0..r.dim() {
            let xy = r.algebra().basis_product_dense(i, j);
            let lhs = iso.mul_vec(&f, &xy).expect("shape");
            let rhs = product.algebra().mul(&cols[i], &cols[j]);
            if lhs != rhs {
                return Err(CrossedError::IsoFailure(i, j));
            }
        }
    }
    let _ = embed;
    Ok(Extraction { system, product, iso, inverses })
}

/// Replaces each `u_σ` by `c_σ u_σ` in the built product and re-extracts.
pub fn coboundary_twist(sys: &CrossedSystem, c: &BTreeMap<usize, Vec<Elem>>) -> Result<CrossedSystem, CrossedError> {
    let cp = build_crossed_product(sys)?;
    let g = sys.groupoid();
    let mut units = BTreeMap::new();
    for s in g.arrows() {
        let a = sys.target_fiber(s);
        let cs = match c.get(&s) {
            Some(v) => v.clone(),
            None => a.one()?,
        };
        if a.invert(&cs).is_none() {
            return Err(CrossedError::NotInvertible(s));
        }
        if g.is_object(s) && Some(cs.as_slice()) != a.unit() {
            return Err(CrossedError::NotObjectUnit(s));
        }
        units.insert(s, cp.algebra().mul(&cp.element(g.dst(s), &cs), &cp.u(s)));
    }
    Ok(extract_crossed_system(cp.graded(), &units)?.system)
}
