//! Finite-dimensional associative algebras given by structure constants.
//!
//! Elements are dense coefficient vectors over the basis `b_0, …, b_{n-1}`.
//! Products of basis vectors are stored sparsely.

use crate::groupoid::FiniteGroupoid;
use crate::report::{ValidationReport, Verdict};
use crate::scalar::{irreducible, poly, poly_irreducible, vector, Elem, Field, Irreducibility, Matrix, RowSpace, ScalarError, Subfield};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::collections::VecDeque;
use thiserror::Error;

/// A subspace of an algebra, kept in reduced echelon form.
pub type Subspace = RowSpace;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AlgebraError {
    #[error("shape error: {0}")]
    Shape(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error("algebra has no unit")]
    NoUnit,
    #[error("invalid algebra:\n{0}")]
    Invalid(ValidationReport),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureConstantAlgebra {
    field: Field,
    dim: usize,
    products: Vec<Vec<(usize, Elem)>>,
    unit: Option<Vec<Elem>>,
}

impl StructureConstantAlgebra {
    /// Builds from sparse constants `(i, j, k, c)` meaning `c` is added to the
    /// coefficient of `b_k` in `b_i b_j`. When `unit` is `None` a two-sided
    /// identity is solved for; it stays `None` if there is none.
    pub fn from_sparse(
        field: Field,
        dim: usize,
        constants: impl IntoIterator<Item = (usize, usize, usize, Elem)>,
        unit: Option<Vec<Elem>>,
    ) -> Result<Self, AlgebraError> {
        let mut dense: Vec<Vec<Elem>> = vec![Vec::new(); dim * dim];
        for (i, j, k, c) in constants {
            if i >= dim || j >= dim || k >= dim {
                return Err(AlgebraError::Shape(format!("index ({i}, {j}, {k}) out of range for dimension {dim}")));
            }
            field.check(&c)?;
            let slot = &mut dense[i * dim + j];
            if slot.is_empty() {
                *slot = vector::zeros(&field, dim);
            }
            slot[k] = field.add(&slot[k], &c);
        }
        let products = dense.into_iter().map(|v| sparse(&field, &v)).collect();
        Self::assemble(field, dim, products, unit)
    }

    /// Builds from a function giving the dense product of two basis vectors.
    pub fn from_fn(
        field: Field,
        dim: usize,
        mut f: impl FnMut(usize, usize) -> Vec<Elem>,
        unit: Option<Vec<Elem>>,
    ) -> Result<Self, AlgebraError> {
        let mut products = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = f(i, j);
                if v.len() != dim {
                    return Err(AlgebraError::Shape(format!("product ({i}, {j}) has length {}", v.len())));
                }
                products.push(sparse(&field, &v));
            }
        }
        Self::assemble(field, dim, products, unit)
    }

    fn assemble(field: Field, dim: usize, products: Vec<Vec<(usize, Elem)>>, unit: Option<Vec<Elem>>) -> Result<Self, AlgebraError> {
        if let Some(u) = &unit {
            if u.len() != dim {
                return Err(AlgebraError::Shape(format!("unit has length {}, expected {dim}", u.len())));
            }
            for c in u {
                field.check(c)?;
            }
        }
        let mut alg = Self { field, dim, products, unit };
        if alg.unit.is_none() {
            alg.unit = alg.solve_unit();
        }
        Ok(alg)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> Option<&[Elem]> {
        self.unit.as_deref()
    }

    pub fn one(&self) -> Result<Vec<Elem>, AlgebraError> {
        self.unit.clone().ok_or(AlgebraError::NoUnit)
    }

    pub fn zero(&self) -> Vec<Elem> {
        vector::zeros(&self.field, self.dim)
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Elem> {
        vector::unit(&self.field, self.dim, i)
    }

    /// Sparse product `b_i b_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, Elem)] {
        &self.products[i * self.dim + j]
    }

    /// All nonzero structure constants `(i, j, k, c)`.
    pub fn constants(&self) -> impl Iterator<Item = (usize, usize, usize, &Elem)> + '_ {
        self.products.iter().enumerate().flat_map(move |(ij, v)| v.iter().map(move |(k, c)| (ij / self.dim, ij % self.dim, *k, c)))
    }

    /// Replaces one structure constant; used to build corrupted tables.
    pub fn with_constant(&self, i: usize, j: usize, k: usize, c: Elem) -> Self {
        let mut dense = self.basis_product_dense(i, j);
        dense[k] = c;
        let mut out = self.clone();
        out.products[i * self.dim + j] = sparse(&self.field, &dense);
        out
    }

    pub fn basis_product_dense(&self, i: usize, j: usize) -> Vec<Elem> {
        let mut v = self.zero();
        for (k, c) in self.basis_product(i, j) {
            v[*k] = c.clone();
        }
        v
    }

    pub fn mul(&self, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
        let f = &self.field;
        let mut out = self.zero();
        for (i, ai) in a.iter().enumerate() {
            if f.is_zero(ai) {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if f.is_zero(bj) {
                    continue;
                }
                let ab = f.mul(ai, bj);
                for (k, c) in self.basis_product(i, j) {
                    f.add_mul_assign(&mut out[*k], &ab, c);
                }
            }
        }
        out
    }

    pub fn add(&self, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
        vector::add(&self.field, a, b)
    }

    pub fn sub(&self, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
        vector::sub(&self.field, a, b)
    }

    pub fn scale(&self, c: &Elem, a: &[Elem]) -> Vec<Elem> {
        vector::scale(&self.field, c, a)
    }

    pub fn is_zero(&self, a: &[Elem]) -> bool {
        vector::is_zero(&self.field, a)
    }

    pub fn commutator(&self, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
        self.sub(&self.mul(a, b), &self.mul(b, a))
    }

    /// `b_i * a` for a dense `a`.
    fn basis_mul_left(&self, i: usize, a: &[Elem]) -> Vec<Elem> {
        let f = &self.field;
        let mut out = self.zero();
        for (j, aj) in a.iter().enumerate() {
            if f.is_zero(aj) {
                continue;
            }
            for (k, c) in self.basis_product(i, j) {
                f.add_mul_assign(&mut out[*k], aj, c);
            }
        }
        out
    }

    /// `a * b_j` for a dense `a`.
    fn basis_mul_right(&self, a: &[Elem], j: usize) -> Vec<Elem> {
        let f = &self.field;
        let mut out = self.zero();
        for (i, ai) in a.iter().enumerate() {
            if f.is_zero(ai) {
                continue;
            }
            for (k, c) in self.basis_product(i, j) {
                f.add_mul_assign(&mut out[*k], ai, c);
            }
        }
        out
    }

    pub fn pow(&self, a: &[Elem], e: usize) -> Result<Vec<Elem>, AlgebraError> {
        let mut acc = self.one()?;
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        Ok(acc)
    }

    /// Matrix of `x ↦ a x` in the basis (columns are images of basis vectors).
    pub fn left_matrix(&self, a: &[Elem]) -> Matrix {
        let cols: Vec<Vec<Elem>> = (0..self.dim).map(|j| self.basis_mul_right(a, j)).collect();
        Matrix::from_columns(self.dim, &cols).expect("square")
    }

    /// Matrix of `x ↦ x a`.
    pub fn right_matrix(&self, a: &[Elem]) -> Matrix {
        let cols: Vec<Vec<Elem>> = (0..self.dim).map(|i| self.basis_mul_left(i, a)).collect();
        Matrix::from_columns(self.dim, &cols).expect("square")
    }

    fn solve_unit(&self) -> Option<Vec<Elem>> {
        let f = &self.field;
        let n = self.dim;
        if n == 0 {
            return None;
        }
        // u b_j = b_j and b_j u = b_j for all j, linear in u
        let mut sys = crate::scalar::linalg::LinearSystem::new(f, n);
        for j in 0..n {
            for k in 0..n {
                let left: Vec<Elem> = (0..n).map(|i| coeff(self.basis_product(i, j), k, f)).collect();
                let right: Vec<Elem> = (0..n).map(|i| coeff(self.basis_product(j, i), k, f)).collect();
                let rhs = if j == k { f.one() } else { f.zero() };
                sys.push(&left, &rhs);
                sys.push(&right, &rhs);
            }
        }
        sys.solve().map(|s| s.particular)
    }

    /// Associativity on every basis triple and the unit laws on every basis
    /// vector.
    pub fn validate(&self) -> ValidationReport {
        let mut r = ValidationReport::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                let ij = self.basis_product_dense(i, j);
                for k in 0..self.dim {
                    let left = self.basis_mul_right(&ij, k);
                    let jk = self.basis_product_dense(j, k);
                    let right = self.basis_mul_left(i, &jk);
                    if left != right {
                        r.push("associativity", vec![i, j, k], format!("(b{i} b{j}) b{k} != b{i} (b{j} b{k})"));
                    }
                }
            }
        }
        match &self.unit {
            None => r.push("unit", vec![], "no two-sided identity"),
            Some(u) => {
                for i in 0..self.dim {
                    let b = self.basis_vector(i);
                    if self.basis_mul_right(u, i) != b || self.basis_mul_left(i, u) != b {
                        r.push("unit", vec![i], format!("declared unit does not fix b{i}"));
                    }
                }
            }
        }
        r
    }

    /// The center, as the solution space of `[x, b_k] = 0` for all `k`.
    pub fn center(&self) -> Subspace {
        let f = &self.field;
        let n = self.dim;
        let mut eqs = RowSpace::new(f, n);
        for k in 0..n {
            for l in 0..n {
                let row: Vec<Elem> =
                    (0..n).map(|i| f.sub(&coeff(self.basis_product(i, k), l, f), &coeff(self.basis_product(k, i), l, f))).collect();
                eqs.insert(&row);
            }
            if eqs.dim() == n {
                break;
            }
        }
        let mut z = RowSpace::new(f, n);
        for v in eqs.null_space() {
            z.insert(&v);
        }
        z
    }

    pub fn is_central(&self, a: &[Elem]) -> bool {
        (0..self.dim).all(|k| self.basis_mul_right(a, k) == self.basis_mul_left(k, a))
    }

    /// Two-sided inverse of `a`, if any.
    pub fn invert(&self, a: &[Elem]) -> Option<Vec<Elem>> {
        let one = self.unit.clone()?;
        let sol = crate::scalar::solve(&self.field, &self.left_matrix(a), &one).ok()??;
        let x = sol.particular;
        (self.mul(&x, a) == one).then_some(x)
    }

    /// Smallest two-sided ideal containing `gens`.
    pub fn two_sided_ideal(&self, gens: &[Vec<Elem>]) -> Subspace {
        let mut space = RowSpace::new(&self.field, self.dim);
        let mut queue: VecDeque<Vec<Elem>> = VecDeque::new();
        for g in gens {
            if space.insert(g) {
                queue.push_back(g.clone());
            }
        }
        while let Some(v) = queue.pop_front() {
            if space.dim() == self.dim {
                break;
            }
            for k in 0..self.dim {
                for w in [self.basis_mul_left(k, &v), self.basis_mul_right(&v, k)] {
                    if space.insert(&w) {
                        queue.push_back(w);
                    }
                }
            }
        }
        space
    }

    /// Values `tr(L_{b_k})`.
    fn basis_traces(&self) -> Vec<Elem> {
        let f = &self.field;
        (0..self.dim)
            .map(|k| {
                let mut t = f.zero();
                for l in 0..self.dim {
                    t = f.add(&t, &coeff(self.basis_product(k, l), l, f));
                }
                t
            })
            .collect()
    }

    /// Kernel of the trace form `tr(L_x L_y)`. Equals the Jacobson radical
    /// when the characteristic is 0 or exceeds the dimension.
    pub fn trace_form_radical(&self) -> Subspace {
        let f = &self.field;
        let t = self.basis_traces();
        let mut rows = Vec::with_capacity(self.dim);
        for i in 0..self.dim {
            let row: Vec<Elem> = (0..self.dim)
                .map(|j| {
                    let mut s = f.zero();
                    for (k, c) in self.basis_product(i, j) {
                        f.add_mul_assign(&mut s, c, &t[*k]);
                    }
                    s
                })
                .collect();
            rows.push(row);
        }
        let gram = Matrix::from_rows(self.dim, rows).expect("square");
        let mut rad = RowSpace::new(f, self.dim);
        for v in crate::scalar::kernel(f, &gram) {
            rad.insert(&v);
        }
        rad
    }

    /// Minimal polynomial of `a` (monic, ascending coefficients).
    pub fn minimal_polynomial(&self, a: &[Elem]) -> Result<Vec<Elem>, AlgebraError> {
        let f = &self.field;
        let mut powers = vec![self.one()?];
        loop {
            let next = self.mul(powers.last().unwrap(), a);
            powers.push(next);
            let m = Matrix::from_columns(self.dim, &powers).expect("columns of algebra length");
            if let Some(k) = crate::scalar::kernel(f, &m).into_iter().next() {
                return Ok(poly::make_monic(f, &k));
            }
        }
    }

    /// Evaluates a polynomial at `a`.
    pub fn eval_poly(&self, p: &[Elem], a: &[Elem]) -> Result<Vec<Elem>, AlgebraError> {
        let one = self.one()?;
        let mut acc = self.zero();
        for c in p.iter().rev() {
            acc = self.mul(&acc, a);
            acc = self.add(&acc, &self.scale(c, &one));
        }
        Ok(acc)
    }

    /// Decides simplicity with the applicable method: the trace form in
    /// characteristic 0 or above the dimension, otherwise exhaustive ideal
    /// generation over a small finite field, otherwise undecided.
    pub fn is_simple(&self, seed: u64) -> SimplicityReport {
        let p = self.field.characteristic();
        if p == 0 || p as usize > self.dim {
            self.is_simple_trace_form(seed, 64)
        } else {
            self.is_simple_exhaustive(EXHAUSTIVE_LIMIT)
        }
    }

    /// Radical via the trace form, then a primitive-element test that the
    /// center is a field.
    pub fn is_simple_trace_form(&self, seed: u64, attempts: usize) -> SimplicityReport {
        let mut rep = SimplicityReport::new(SimplicityMethod::TraceForm);
        let p = self.field.characteristic();
        if !(p == 0 || p as usize > self.dim) {
            rep.detail = format!("trace form does not detect the radical in characteristic {p} at dimension {}", self.dim);
            return rep;
        }
        if let Some(r) = self.trivial_verdict(&mut rep) {
            return r;
        }
        let rad = self.trace_form_radical();
        rep.radical_dim = Some(rad.dim());
        if rad.dim() > 0 {
            rep.verdict = Verdict::Fail;
            rep.detail = format!("radical has dimension {}", rad.dim());
            rep.witness_ideal = Some(rad.basis().to_vec());
            return rep;
        }
        let z = self.center();
        rep.center_dim = Some(z.dim());
        if z.dim() == 1 {
            rep.verdict = Verdict::Pass;
            rep.detail = "semisimple with one-dimensional center".into();
            return rep;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let basis = z.basis().to_vec();
        for attempt in 0..attempts {
            let cand: Vec<Elem> = if attempt < basis.len() {
                basis[attempt].clone()
            } else {
                let mut v = self.zero();
                for b in &basis {
                    let c = self.field.random_small(&mut rng);
                    vector::axpy(&self.field, &mut v, &c, b);
                }
                v
            };
            let m = match self.minimal_polynomial(&cand) {
                Ok(m) => m,
                Err(_) => break,
            };
            let deg = poly::degree(&m).unwrap_or(0);
            if deg <= 1 {
                continue;
            }
            if let Some(g) = proper_factor(&self.field, &m) {
                let zd = self.eval_poly(&g, &cand).expect("unit exists");
                let ideal = self.two_sided_ideal(std::slice::from_ref(&zd));
                if ideal.dim() < self.dim && ideal.dim() > 0 {
                    rep.verdict = Verdict::Fail;
                    rep.detail = "center contains a zero divisor".into();
                    rep.generator = Some(zd);
                    rep.minimal_polynomial = Some(m);
                    rep.witness_ideal = Some(ideal.basis().to_vec());
                    return rep;
                }
                continue;
            }
            if deg == z.dim() {
                let irr = poly_irreducible(&self.field, &m).unwrap_or(Irreducibility::Asserted);
                rep.minimal_polynomial = Some(m);
                rep.generator = Some(cand);
                rep.irreducibility = Some(irr);
                if irr == Irreducibility::Yes {
                    rep.verdict = Verdict::Pass;
                    rep.detail = "semisimple and the center is a field".into();
                } else {
                    rep.detail = "irreducibility of the central minimal polynomial is not certified".into();
                }
                return rep;
            }
        }
        rep.detail = format!("no primitive central element found in {attempts} attempts");
        rep
    }

    /// Checks `ideal(v) = A` for one representative of every line.
    pub fn is_simple_exhaustive(&self, limit: u128) -> SimplicityReport {
        let mut rep = SimplicityReport::new(SimplicityMethod::Exhaustive);
        let Some(q) = self.field.size() else {
            rep.detail = "exhaustive search needs a finite field".into();
            return rep;
        };
        let lines = (0..self.dim as u32).try_fold(0u128, |acc, i| q.checked_pow(i).and_then(|x| acc.checked_add(x)));
        match lines {
            Some(l) if l <= limit => {}
            _ => {
                rep.detail = format!("more than {limit} lines to check");
                return rep;
            }
        }
        if let Some(r) = self.trivial_verdict(&mut rep) {
            return r;
        }
        let elems = self.field.elements(q).expect("finite field");
        let one = self.field.one();
        let n = self.dim;
        let mut checked = 0usize;
        for lead in 0..n {
            // vectors (0, …, 0, 1, *, …, *) with the 1 in position `lead`
            let free = n - lead - 1;
            let mut digits = vec![0usize; free];
            loop {
                let mut v = self.zero();
                v[lead] = one.clone();
                for (t, &d) in digits.iter().enumerate() {
                    v[lead + 1 + t] = elems[d].clone();
                }
                checked += 1;
                let ideal = self.two_sided_ideal(&[v.clone()]);
                if ideal.dim() < n {
                    rep.verdict = Verdict::Fail;
                    rep.detail = format!("proper ideal of dimension {}", ideal.dim());
                    rep.generator = Some(v);
                    rep.witness_ideal = Some(ideal.basis().to_vec());
                    rep.lines_checked = Some(checked);
                    return rep;
                }
                if !odometer(&mut digits, elems.len()) {
                    break;
                }
            }
        }
        rep.verdict = Verdict::Pass;
        rep.detail = "every nonzero element generates the whole algebra".into();
        rep.lines_checked = Some(checked);
        rep
    }

    fn trivial_verdict(&self, rep: &mut SimplicityReport) -> Option<SimplicityReport> {
        if self.dim == 0 {
            rep.verdict = Verdict::Fail;
            rep.detail = "zero algebra".into();
            return Some(rep.clone());
        }
        if self.unit.is_none() {
            rep.verdict = Verdict::Undecided;
            rep.detail = "algebra has no unit".into();
            return Some(rep.clone());
        }
        None
    }

    /// Matrix algebra `M_n(field)`; `E_ij` has index `i * n + j`.
    pub fn matrix(field: &Field, n: usize) -> Result<Self, AlgebraError> {
        if n == 0 {
            return Err(AlgebraError::Shape("matrix size 0".into()));
        }
        let idx = |i: usize, j: usize| i * n + j;
        let mut consts = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    consts.push((idx(i, j), idx(j, l), idx(i, l), field.one()));
                }
            }
        }
        let mut unit = vector::zeros(field, n * n);
        for i in 0..n {
            unit[idx(i, i)] = field.one();
        }
        Self::from_sparse(field.clone(), n * n, consts, Some(unit))
    }

    /// Groupoid algebra `field[G]` with basis the arrows; for a group this
    /// is the group algebra.
    pub fn groupoid_algebra(field: &Field, g: &FiniteGroupoid) -> Result<Self, AlgebraError> {
        let consts = g.composition_table().iter().map(|(&(s, t), &st)| (s, t, st, field.one())).collect::<Vec<_>>();
        let mut unit = vector::zeros(field, g.len());
        for &e in g.objects() {
            unit[e] = field.one();
        }
        Self::from_sparse(field.clone(), g.len(), consts, Some(unit))
    }

    /// An extension field as an algebra over its base, in the power basis.
    pub fn field_as_algebra(ext: &Field) -> Result<Self, AlgebraError> {
        let base = ext.base().ok_or_else(|| AlgebraError::Shape(format!("{ext} is not an extension")))?.clone();
        let n = ext.degree();
        let x = ext.generator().expect("extension");
        let powers: Vec<Elem> = (0..n).map(|i| ext.pow(&x, i as u64)).collect();
        let mut unit = vector::zeros(&base, n);
        unit[0] = base.one();
        Self::from_fn(base, n, |i, j| ext.coeffs(&ext.mul(&powers[i], &powers[j])), Some(unit))
    }

    /// A verified subfield of an extension as an algebra over the base.
    pub fn from_subfield(sub: &Subfield) -> Result<Self, AlgebraError> {
        let report = sub.verify();
        if !report.is_ok() {
            return Err(AlgebraError::Invalid(report));
        }
        let consts = sub.structure_constants();
        let unit = sub.coordinates(&sub.ambient.one()).expect("verified");
        Self::from_fn(sub.base().clone(), sub.dim(), |i, j| consts[i][j].clone(), Some(unit))
    }

    /// The algebra with the opposite multiplication.
    pub fn opposite(&self) -> Self {
        let mut out = self.clone();
        for i in 0..self.dim {
            for j in 0..self.dim {
                out.products[i * self.dim + j] = self.products[j * self.dim + i].clone();
            }
        }
        out
    }
}

pub const EXHAUSTIVE_LIMIT: u128 = 200_000;

fn sparse(field: &Field, v: &[Elem]) -> Vec<(usize, Elem)> {
    v.iter().enumerate().filter(|(_, c)| !field.is_zero(c)).map(|(k, c)| (k, c.clone())).collect()
}

fn coeff(v: &[(usize, Elem)], k: usize, field: &Field) -> Elem {
    v.iter().find(|(i, _)| *i == k).map(|(_, c)| c.clone()).unwrap_or_else(|| field.zero())
}

fn odometer(digits: &mut [usize], base: usize) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

/// A monic factor of `m` of degree strictly between 0 and `deg m`, when one
/// can be exhibited.
fn proper_factor(field: &Field, m: &[Elem]) -> Option<Vec<Elem>> {
    let deg = poly::degree(m)?;
    if deg < 2 {
        return None;
    }
    match field {
        Field::Rational => {
            let roots = irreducible::rational_roots(m)?;
            let r = roots.first()?;
            Some(vec![field.neg(&Elem::Q(r.clone())), field.one()])
        }
        _ if field.is_finite() => irreducible::exhaustive_factor(field, m),
        _ => None,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SimplicityMethod {
    TraceForm,
    Exhaustive,
}

/// Outcome of a simplicity test. `Pass` means simple, `Fail` means not
/// simple (with a proper nonzero ideal in `witness_ideal`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicityReport {
    pub verdict: Verdict,
    pub method: SimplicityMethod,
    pub detail: String,
    pub radical_dim: Option<usize>,
    pub center_dim: Option<usize>,
    pub generator: Option<Vec<Elem>>,
    pub minimal_polynomial: Option<Vec<Elem>>,
    pub irreducibility: Option<Irreducibility>,
    pub witness_ideal: Option<Vec<Vec<Elem>>>,
    pub lines_checked: Option<usize>,
}

impl SimplicityReport {
    fn new(method: SimplicityMethod) -> Self {
        Self {
            verdict: Verdict::Undecided,
            method,
            detail: String::new(),
            radical_dim: None,
            center_dim: None,
            generator: None,
            minimal_polynomial: None,
            irreducibility: None,
            witness_ideal: None,
            lines_checked: None,
        }
    }
}
