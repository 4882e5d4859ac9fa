//! Separability of `R/R₀` for object unital strongly graded algebras: the
//! maps `γ_σ`, local traces, the trace criterion and Casimir elements.

use crate::crossed::CrossedProduct;
use crate::graded::{GradedAlgebra, ObjectUnits, StrongGrading};
use crate::report::{ValidationReport, Verdict};
use crate::scalar::linalg::LinearSystem;
use crate::scalar::{rank, vector, Elem, Field, Matrix, RowSpace};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

pub mod tensor;

pub use tensor::TensorElement;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SeparabilityError {
    #[error("not strongly graded at arrow {0}")]
    NotStronglyGraded(usize),
    #[error("element is not in the center of R0")]
    NotCentral,
    #[error("gamma at arrow {0} left the center")]
    OutputNotCentral(usize),
    #[error("separability criterion not satisfied")]
    CriterionNotPassed,
    #[error("tensor support at ({0}, {1}) is not of the form (σ, σ⁻¹); shape not handled")]
    ShapeNotHandled(usize, usize),
    #[error("Casimir family fails verification:\n{0}")]
    CasimirInvalid(ValidationReport),
    #[error("derived trace solution fails at object {0}: {1}")]
    Derivation(usize, String),
}

/// For each arrow σ, pairs `(u_σ^{(i)}, v_{σ⁻¹}^{(i)})` with
/// `Σ u v = 1_{R_{r(σ)}}`. Identity arrows carry `(1_{R_e}, 1_{R_e})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectionData {
    pub pairs: Vec<Vec<(Vec<Elem>, Vec<Elem>)>>,
}

impl SectionData {
    /// Reshapes the strong-grading solutions into section pairs.
    pub fn from_strong_grading(r: &GradedAlgebra, units: &ObjectUnits, sg: &StrongGrading) -> Result<Self, SeparabilityError> {
        let g = r.groupoid();
        let a = r.algebra();
        let mut pairs = Vec::with_capacity(g.len());
        for s in g.arrows() {
            if g.is_object(s) {
                let one = units.get(s).to_vec();
                pairs.push(vec![(one.clone(), one)]);
                continue;
            }
            let entry = &sg.arrows[s];
            if !entry.pass {
                return Err(SeparabilityError::NotStronglyGraded(s));
            }
            pairs.push(entry.terms.iter().map(|(i, j, c)| (a.scale(c, &a.basis_vector(*i)), a.basis_vector(*j))).collect());
        }
        Ok(Self { pairs })
    }

    /// The single pair `(β_{σ,σ⁻¹}⁻¹ u_σ, u_{σ⁻¹})` per arrow.
    pub fn canonical(cp: &CrossedProduct) -> Self {
        let pairs = cp.groupoid().arrows().map(|s| vec![cp.canonical_section(s)]).collect();
        Self { pairs }
    }

    pub fn at(&self, s: usize) -> &[(Vec<Elem>, Vec<Elem>)] {
        &self.pairs[s]
    }

    /// Checks homogeneity and the defining sum for every arrow.
    pub fn verify(&self, r: &GradedAlgebra, units: &ObjectUnits) -> ValidationReport {
        let g = r.groupoid();
        let mut rep = ValidationReport::new();
        for s in g.arrows() {
            let mut sum = r.algebra().zero();
            for (u, v) in &self.pairs[s] {
                if !r.is_homogeneous_of(u, s) || !r.is_homogeneous_of(v, g.inv(s)) {
                    rep.push("section-degree", vec![s], "section element of the wrong degree");
                }
                sum = r.algebra().add(&sum, &r.mul(u, v));
            }
            if sum != units.get(g.dst(s)) {
                rep.push("section-sum", vec![s], "sum of products is not the object unit");
            }
        }
        rep
    }
}

/// Shared data for the `γ`/trace computations on one graded algebra.
#[derive(Clone, Debug)]
pub struct Sections<'a> {
    pub r: &'a GradedAlgebra,
    pub units: &'a ObjectUnits,
    pub data: &'a SectionData,
    centers: BTreeMap<usize, RowSpace>,
}

impl<'a> Sections<'a> {
    pub fn new(r: &'a GradedAlgebra, units: &'a ObjectUnits, data: &'a SectionData) -> Self {
        let mut centers = BTreeMap::new();
        for &e in r.groupoid().objects() {
            let mut z = RowSpace::new(r.field(), r.dim());
            if let Ok(a) = r.fiber_algebra(e) {
                for v in a.center().basis() {
                    z.insert(&r.embed_component(e, v));
                }
            }
            centers.insert(e, z);
        }
        Self { r, units, data, centers }
    }

    pub fn field(&self) -> &Field {
        self.r.field()
    }

    /// Basis of `Z(R_e)` as full vectors.
    pub fn center_basis(&self, e: usize) -> &[Vec<Elem>] {
        self.centers[&e].basis()
    }

    /// Basis of `Z(R₀) = ⊕ Z(R_e)`.
    pub fn center_r0_basis(&self) -> Vec<Vec<Elem>> {
        self.centers.values().flat_map(|z| z.basis().iter().cloned()).collect()
    }

    pub fn is_in_center_of(&self, e: usize, x: &[Elem]) -> bool {
        self.centers[&e].contains(x)
    }

    /// Whether `x ∈ Z(R₀)`, checked against every `R₀` basis vector.
    pub fn is_central_in_r0(&self, x: &[Elem]) -> bool {
        let g = self.r.groupoid();
        if x.iter().enumerate().any(|(i, c)| !self.field().is_zero(c) && !g.is_object(self.r.degree(i))) {
            return false;
        }
        g.objects().iter().all(|&e| {
            self.r.component(e).iter().all(|&i| {
                let b = self.r.algebra().basis_vector(i);
                self.r.mul(x, &b) == self.r.mul(&b, x)
            })
        })
    }

    /// `Σ u^{(i)} x v^{(i)}` with no centrality requirement on `x`.
    pub fn gamma_raw(&self, s: usize, x: &[Elem]) -> Vec<Elem> {
        let a = self.r.algebra();
        let mut out = a.zero();
        for (u, v) in self.data.at(s) {
            out = a.add(&out, &self.r.mul(&self.r.mul(u, x), v));
        }
        out
    }

    /// `γ_σ` on `Z(R₀)`, landing in `Z(R_{r(σ)})`.
    pub fn gamma(&self, s: usize, x: &[Elem]) -> Result<Vec<Elem>, SeparabilityError> {
        if !self.is_central_in_r0(x) {
            return Err(SeparabilityError::NotCentral);
        }
        let y = self.gamma_raw(s, x);
        if !self.is_in_center_of(self.r.groupoid().dst(s), &y) {
            return Err(SeparabilityError::OutputNotCentral(s));
        }
        Ok(y)
    }

    /// `tr_e(x) = Σ_{σ ∈ G(e)} γ_σ(x)`.
    pub fn trace(&self, e: usize, x: &[Elem]) -> Result<Vec<Elem>, SeparabilityError> {
        let a = self.r.algebra();
        let mut out = a.zero();
        for s in self.r.groupoid().isotropy_arrows(e) {
            out = a.add(&out, &self.gamma(s, x)?);
        }
        Ok(out)
    }

    /// Component of `x` in `R_e`.
    pub fn component_at(&self, e: usize, x: &[Elem]) -> Vec<Elem> {
        self.r.embed_component(e, &self.r.component_coords(e, x))
    }
}

/// Per-object outcome of the trace criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObjectSeparability {
    pub object: usize,
    pub isotropy_size: usize,
    pub center_dim: usize,
    pub verdict: Verdict,
    /// `z ∈ Z(R_e)` with `tr_e(z) = 1_{R_e}`.
    pub trace_solution: Option<Vec<Elem>>,
    /// Rank of `tr_e` on `Z(R_e)`.
    pub trace_rank: usize,
    pub detail: String,
}

/// Crossed-product shortcuts run next to the generic solve.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FastPaths {
    /// Per object, some `a ∈ A_e` with `Σ α_σ(a) = 1`, if one exists.
    pub alpha_sum: BTreeMap<usize, Option<Vec<Elem>>>,
    /// Per object, whether `|G(e)|` is a unit of the fiber; only for
    /// systems with trivial action and central cocycle.
    pub isotropy_order_unit: Option<BTreeMap<usize, bool>>,
    pub disagreements: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparabilityReport {
    pub verdict: Verdict,
    pub objects: Vec<ObjectSeparability>,
    pub fast_paths: Option<FastPaths>,
}

impl SeparabilityReport {
    pub fn trace_solution(&self, e: usize) -> Option<&[Elem]> {
        self.objects.iter().find(|o| o.object == e)?.trace_solution.as_deref()
    }
}

/// Solves `tr_e(z) = 1_{R_e}` over `Z(R_e)` for every object.
pub fn separability_criterion(sec: &Sections) -> Result<SeparabilityReport, SeparabilityError> {
    let f = sec.field().clone();
    let g = sec.r.groupoid();
    let mut objects = Vec::new();
    for &e in g.objects() {
        let basis = sec.center_basis(e).to_vec();
        let images: Vec<Vec<Elem>> = basis.iter().map(|z| sec.trace(e, z)).collect::<Result<_, _>>()?;
        let target = sec.units.get(e);
        let mut sys = LinearSystem::new(&f, basis.len());
        for k in 0..sec.r.dim() {
            let row: Vec<Elem> = images.iter().map(|v| v[k].clone()).collect();
            sys.push(&row, &target[k]);
        }
        let trace_rank = if images.is_empty() { 0 } else { rank(&f, &Matrix::from_columns(sec.r.dim(), &images).expect("shape")) };
        let solution = sys.solve().map(|sol| {
            let mut z = sec.r.algebra().zero();
            for (c, b) in sol.particular.iter().zip(&basis) {
                vector::axpy(&f, &mut z, c, b);
            }
            z
        });
        let detail = match (&solution, trace_rank) {
            (Some(_), _) => "1 lies in the trace image".to_string(),
            (None, 0) => "trace image = 0".to_string(),
            (None, r) => format!("1 is not in the trace image (rank {r})"),
        };
        objects.push(ObjectSeparability {
            object: e,
            isotropy_size: g.isotropy_arrows(e).len(),
            center_dim: basis.len(),
            verdict: Verdict::from_bool(solution.is_some()),
            trace_solution: solution,
            trace_rank,
            detail,
        });
    }
    let verdict = Verdict::from_bool(objects.iter().all(|o| o.verdict.is_pass()));
    Ok(SeparabilityReport { verdict, objects, fast_paths: None })
}

/// Builds sections from strong grading and runs the criterion; rejects
/// algebras that are not strongly graded, naming the first failing arrow.
pub fn separability_of_graded(r: &GradedAlgebra, units: &ObjectUnits) -> Result<(SectionData, SeparabilityReport), SeparabilityError> {
    let sg = r.is_strongly_graded(units);
    if let Some(&s) = sg.failing().first() {
        return Err(SeparabilityError::NotStronglyGraded(s));
    }
    let data = SectionData::from_strong_grading(r, units, &sg)?;
    let report = separability_criterion(&Sections::new(r, units, &data))?;
    Ok((data, report))
}

/// The criterion on a crossed product with its canonical section, plus
/// both shortcuts, which must agree with the generic solve.
pub fn separability_of_crossed(cp: &CrossedProduct) -> Result<SeparabilityReport, SeparabilityError> {
    let units = cp.object_units();
    let data = SectionData::canonical(cp);
    let sec = Sections::new(cp.graded(), &units, &data);
    let mut report = separability_criterion(&sec)?;
    let sys = cp.system();
    let g = cp.groupoid();
    let f = cp.field().clone();
    let mut fast = FastPaths::default();
    for &e in g.objects() {
        let a = sys.fiber(e);
        let iso = g.isotropy_arrows(e);
        let mut m = Matrix::zeros(&f, a.dim(), a.dim());
        for &s in &iso {
            let next = Matrix::from_rows(a.dim(), (0..a.dim()).map(|i| vector::add(&f, m.row(i), sys.action(s).row(i))).collect())
                .expect("square");
            m = next;
        }
        let sol = crate::scalar::solve(&f, &m, &a.one().expect("unital")).expect("square");
        fast.alpha_sum.insert(e, sol.map(|s| s.particular));
    }
    if sys.has_trivial_action() && sys.has_central_cocycle() {
        let mut map = BTreeMap::new();
        for &e in g.objects() {
            let a = sys.fiber(e);
            let n = f.from_i64(g.isotropy_arrows(e).len() as i64);
            map.insert(e, a.invert(&a.scale(&n, &a.one().expect("unital"))).is_some());
        }
        fast.isotropy_order_unit = Some(map);
    }
    for o in &report.objects {
        let generic = o.verdict.is_pass();
        if fast.alpha_sum[&o.object].is_some() != generic {
            fast.disagreements.push(format!("alpha-sum shortcut disagrees at object {}", o.object));
        }
        if let Some(map) = &fast.isotropy_order_unit {
            if map[&o.object] != generic {
                fast.disagreements.push(format!("isotropy-order shortcut disagrees at object {}", o.object));
            }
        }
    }
    report.fast_paths = Some(fast);
    Ok(report)
}

/// A Casimir family `{x_e}` in `R ⊗_{R₀} R`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CasimirFamily {
    pub elements: BTreeMap<usize, TensorElement>,
}

/// `x_e = Σ_{σ ∈ G(ω, e)} γ_σ(r_ω) w_σ` with `ω` the least object of the
/// component of `e` and `r_ω` the stored trace solution.
pub fn casimir_construct(cp: &CrossedProduct, report: &SeparabilityReport) -> Result<CasimirFamily, SeparabilityError> {
    if !report.verdict.is_pass() {
        return Err(SeparabilityError::CriterionNotPassed);
    }
    let units = cp.object_units();
    let data = SectionData::canonical(cp);
    let sec = Sections::new(cp.graded(), &units, &data);
    let g = cp.groupoid();
    let parts = g.connected_components();
    let mut elements = BTreeMap::new();
    for &e in g.objects() {
        let w = parts.representative_of(e).expect("object");
        let r_w = report.trace_solution(w).ok_or(SeparabilityError::CriterionNotPassed)?;
        let mut x = TensorElement::zero();
        for s in g.arrows_between(w, e) {
            let c = sec.gamma(s, r_w)?;
            x = x.add(cp, &tensor::left_mul(cp, &c, &tensor::w(cp, s)));
        }
        elements.insert(e, x);
    }
    Ok(CasimirFamily { elements })
}

/// Checks `μ(x_e) = 1_{R_e}` and `x_e a = a x_f` for every basis vector `a`
/// of `1_{R_e} R 1_{R_f}`.
pub fn casimir_verify(cp: &CrossedProduct, family: &CasimirFamily) -> ValidationReport {
    let mut rep = ValidationReport::new();
    let g = cp.groupoid();
    for &e in g.objects() {
        let Some(x) = family.elements.get(&e) else {
            rep.push("casimir-missing", vec![e], "no element for this object");
            continue;
        };
        if let Err(msg) = x.check_shape(cp) {
            rep.push("casimir-shape", vec![e], msg);
            continue;
        }
        if tensor::mu(cp, x) != cp.u(e) {
            rep.push("casimir-mu", vec![e], "mu(x_e) != 1_e");
        }
    }
    if !rep.is_ok() {
        return rep;
    }
    for i in 0..cp.dim() {
        let rho = cp.graded().degree(i);
        let (e, f) = (g.dst(rho), g.src(rho));
        let a = cp.algebra().basis_vector(i);
        let lhs = tensor::right_mul(cp, &family.elements[&e], &a);
        let rhs = tensor::left_mul(cp, &a, &family.elements[&f]);
        if !lhs.eq_in(cp, &rhs) {
            rep.push("casimir-commute", vec![e, f, i], format!("x_e b{i} != b{i} x_f"));
        }
    }
    rep
}

/// Per-object `d_e` with `tr_e(d_e) = 1_{R_e}`, derived from a verified
/// Casimir family supported on pairs `(σ, σ⁻¹)`.
pub fn trace_solution_from_casimir(cp: &CrossedProduct, family: &CasimirFamily) -> Result<BTreeMap<usize, Vec<Elem>>, SeparabilityError> {
    let rep = casimir_verify(cp, family);
    if !rep.is_ok() {
        return Err(SeparabilityError::CasimirInvalid(rep));
    }
    let g = cp.groupoid();
    let units = cp.object_units();
    let data = SectionData::canonical(cp);
    let sec = Sections::new(cp.graded(), &units, &data);
    let mut out = BTreeMap::new();
    for (&e, x) in &family.elements {
        let mut chosen: BTreeMap<usize, usize> = BTreeMap::new();
        for (&(s, t), c) in &x.coeffs {
            if vector::is_zero(cp.field(), c) {
                continue;
            }
            if t != g.inv(s) || g.dst(s) != e {
                return Err(SeparabilityError::ShapeNotHandled(s, t));
            }
            let src = g.src(s);
            chosen.entry(src).and_modify(|m| *m = (*m).min(s)).or_insert(s);
        }
        let mut d = cp.algebra().zero();
        for &s in chosen.values() {
            let c = tensor::mu(cp, &x.component(s, g.inv(s)));
            if !sec.is_in_center_of(e, &c) {
                return Err(SeparabilityError::Derivation(e, format!("c at arrow {s} is not central")));
            }
            d = cp.algebra().add(&d, &c);
        }
        let t = sec.trace(e, &d)?;
        if t != units.get(e) {
            return Err(SeparabilityError::Derivation(e, "trace of the derived element is not 1".into()));
        }
        out.insert(e, d);
    }
    Ok(out)
}

/// Enumerates every family over a finite field when the family space has
/// at most `limit` members. Returns the number of passing families, or
/// `None` when the space is too large or the field infinite.
pub fn exhaustive_casimir_count(cp: &CrossedProduct, limit: u128) -> Option<usize> {
    let f = cp.field();
    let q = f.size()?;
    let g = cp.groupoid();
    let slots: Vec<(usize, usize, usize)> =
        g.composable_pairs().into_iter().flat_map(|(s, t)| (0..cp.system().target_fiber(s).dim()).map(move |k| (s, t, k))).collect();
    let per_object = q.checked_pow(slots.len() as u32)?;
    let total = per_object.checked_pow(g.objects().len() as u32)?;
    if total > limit {
        return None;
    }
    let elems = f.elements(q)?;
    let make = |code: u128| -> TensorElement {
        let mut x = TensorElement::zero();
        let mut c = code;
        for &(s, t, k) in &slots {
            let d = (c % q) as usize;
            c /= q;
            let entry = x.coeffs.entry((s, t)).or_insert_with(|| vector::zeros(f, cp.system().target_fiber(s).dim()));
            entry[k] = elems[d].clone();
        }
        x
    };
    let objs = g.objects().to_vec();
    let mut count = 0;
    for code in 0..total {
        let mut c = code;
        let mut elements = BTreeMap::new();
        for &e in &objs {
            elements.insert(e, make(c % per_object));
            c /= per_object;
        }
        if casimir_verify(cp, &CasimirFamily { elements }).is_ok() {
            count += 1;
        }
    }
    Some(count)
}

/// `γ_σ(γ_τ(z)) = 0` for non-composable pairs and
/// `γ_{στ}(z_{d(τ)}) 1_{R_{r(σ)}}` otherwise, on a basis of `Z(R₀)`.
pub fn check_gamma_composition(sec: &Sections) -> Result<ValidationReport, SeparabilityError> {
    let g = sec.r.groupoid();
    let mut rep = ValidationReport::new();
    for (k, z) in sec.center_r0_basis().iter().enumerate() {
        for t in g.arrows() {
            let gt = sec.gamma(t, z)?;
            for s in g.arrows() {
                let lhs = sec.gamma(s, &gt)?;
                let rhs = match g.compose(s, t) {
                    None => sec.r.algebra().zero(),
                    Some(st) => {
                        let zd = sec.component_at(g.src(t), z);
                        sec.r.mul(&sec.gamma(st, &zd)?, sec.units.get(g.dst(s)))
                    }
                };
                if lhs != rhs {
                    rep.push("gamma-composition", vec![s, t, k], "composition law fails");
                }
            }
        }
    }
    Ok(rep)
}

/// `γ_σ : Z(R_{d(σ)}) → Z(R_{r(σ)})` is a unital ring isomorphism.
pub fn check_center_isomorphism(sec: &Sections) -> Result<ValidationReport, SeparabilityError> {
    let g = sec.r.groupoid();
    let f = sec.field();
    let mut rep = ValidationReport::new();
    for s in g.arrows() {
        let (d, r) = (g.src(s), g.dst(s));
        let zd = sec.center_basis(d).to_vec();
        let images: Vec<Vec<Elem>> = zd.iter().map(|z| sec.gamma(s, z)).collect::<Result<_, _>>()?;
        if sec.gamma(s, sec.units.get(d))? != sec.units.get(r) {
            rep.push("gamma-unital", vec![s], "gamma does not preserve 1");
        }
        let m = Matrix::from_columns(sec.r.dim(), &images).expect("shape");
        if zd.len() != sec.center_basis(r).len() || (!zd.is_empty() && rank(f, &m) != zd.len()) {
            rep.push("gamma-bijective", vec![s], "gamma is not bijective on centers");
        }
        for i in 0..zd.len() {
            for j in 0..zd.len() {
                let lhs = sec.gamma(s, &sec.r.mul(&zd[i], &zd[j]))?;
                let rhs = sec.r.mul(&images[i], &images[j]);
                if lhs != rhs {
                    rep.push("gamma-multiplicative", vec![s, i, j], "gamma is not multiplicative");
                }
            }
        }
    }
    Ok(rep)
}

/// `r x = γ_σ(x) r` for basis `r ∈ R_σ` and center basis `x`.
pub fn check_commutation(sec: &Sections) -> Result<ValidationReport, SeparabilityError> {
    let g = sec.r.groupoid();
    let mut rep = ValidationReport::new();
    let basis = sec.center_r0_basis();
    for s in g.arrows() {
        for &i in sec.r.component(s) {
            let r = sec.r.algebra().basis_vector(i);
            for (k, x) in basis.iter().enumerate() {
                if sec.r.mul(&r, x) != sec.r.mul(&sec.gamma(s, x)?, &r) {
                    rep.push("commutation", vec![s, i, k], "r x != gamma(x) r");
                }
            }
        }
    }
    Ok(rep)
}

/// Solves for central `t ∈ Z(R_{r(σ)})` with `t r = r x` on all basis
/// `r ∈ R_σ`; the solution must be unique and equal `γ_σ(x)`.
pub fn check_uniqueness(sec: &Sections) -> Result<ValidationReport, SeparabilityError> {
    let g = sec.r.groupoid();
    let f = sec.field().clone();
    let mut rep = ValidationReport::new();
    for s in g.arrows() {
        let (d, r) = (g.src(s), g.dst(s));
        let zr = sec.center_basis(r).to_vec();
        for (k, x) in sec.center_basis(d).iter().enumerate() {
            let mut sys = LinearSystem::new(&f, zr.len());
            for &i in sec.r.component(s) {
                let b = sec.r.algebra().basis_vector(i);
                let cols: Vec<Vec<Elem>> = zr.iter().map(|t| sec.r.mul(t, &b)).collect();
                let rhs = sec.r.mul(&b, x);
                for c in 0..sec.r.dim() {
                    let row: Vec<Elem> = cols.iter().map(|v| v[c].clone()).collect();
                    sys.push(&row, &rhs[c]);
                }
            }
            match sys.solve() {
                Some(sol) if sol.is_unique() => {
                    let mut t = sec.r.algebra().zero();
                    for (c, b) in sol.particular.iter().zip(&zr) {
                        vector::axpy(&f, &mut t, c, b);
                    }
                    if t != sec.gamma(s, x)? {
                        rep.push("uniqueness", vec![s, k], "solution differs from gamma(x)");
                    }
                }
                _ => rep.push("uniqueness", vec![s, k], "no unique central solution"),
            }
        }
    }
    Ok(rep)
}

/// `r w_τ = w_{στ} r` for composable `(σ, τ)` and basis `r ∈ R_σ`.
pub fn check_w_shuttle(cp: &CrossedProduct) -> ValidationReport {
    let g = cp.groupoid();
    let mut rep = ValidationReport::new();
    for (s, t) in g.composable_pairs() {
        let st = g.compose(s, t).expect("composable");
        let wt = tensor::w(cp, t);
        let wst = tensor::w(cp, st);
        for k in 0..cp.system().target_fiber(s).dim() {
            let r = cp.algebra().basis_vector(cp.index(s, k));
            let lhs = tensor::left_mul(cp, &r, &wt);
            let rhs = tensor::right_mul(cp, &wst, &r);
            if !lhs.eq_in(cp, &rhs) {
                rep.push("w-shuttle", vec![s, t, k], "r w_t != w_st r");
            }
        }
    }
    rep
}

/// Serializable per-object summary used by reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObjectSummary {
    pub object: String,
    pub isotropy_size: usize,
    pub center_dim: usize,
    pub verdict: Verdict,
    pub detail: String,
}
