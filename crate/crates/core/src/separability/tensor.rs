//! Normal forms in `R ⊗_{R₀} R` for a crossed product `R`.
//!
//! Every element is `Σ a_{σ,τ} u_σ ⊗ u_τ` over composable pairs with
//! `a_{σ,τ} ∈ A_{r(σ)}`; simple tensors on non-composable pairs vanish.

use crate::crossed::CrossedProduct;
use crate::scalar::{vector, Elem};
use std::collections::BTreeMap;

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TensorElement {
    pub coeffs: BTreeMap<(usize, usize), Vec<Elem>>,
}

impl TensorElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `a u_σ ⊗ u_τ`.
    pub fn term(s: usize, t: usize, a: Vec<Elem>) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert((s, t), a);
        Self { coeffs }
    }

    pub fn add(&self, cp: &CrossedProduct, other: &TensorElement) -> TensorElement {
        let f = cp.field();
        let mut out = self.clone();
        for (k, v) in &other.coeffs {
            match out.coeffs.get_mut(k) {
                Some(w) => *w = vector::add(f, w, v),
                None => {
                    out.coeffs.insert(*k, v.clone());
                }
            }
        }
        out.normalized(cp)
    }

    pub fn scale_by(&self, cp: &CrossedProduct, c: &Elem) -> TensorElement {
        let f = cp.field();
        let coeffs = self.coeffs.iter().map(|(k, v)| (*k, vector::scale(f, c, v))).collect();
        TensorElement { coeffs }.normalized(cp)
    }

    /// The part at one pair.
    pub fn component(&self, s: usize, t: usize) -> TensorElement {
        match self.coeffs.get(&(s, t)) {
            Some(v) => Self::term(s, t, v.clone()),
            None => Self::zero(),
        }
    }

    /// Drops zero coefficients.
    pub fn normalized(&self, cp: &CrossedProduct) -> TensorElement {
        let f = cp.field();
        let coeffs = self.coeffs.iter().filter(|(_, v)| !vector::is_zero(f, v)).map(|(k, v)| (*k, v.clone())).collect();
        TensorElement { coeffs }
    }

    pub fn eq_in(&self, cp: &CrossedProduct, other: &TensorElement) -> bool {
        self.normalized(cp) == other.normalized(cp)
    }

    pub fn is_zero(&self, cp: &CrossedProduct) -> bool {
        self.normalized(cp).coeffs.is_empty()
    }

    /// Keys must be composable and coefficients must live in `A_{r(σ)}`.
    pub fn check_shape(&self, cp: &CrossedProduct) -> Result<(), String> {
        let g = cp.groupoid();
        for (&(s, t), v) in &self.coeffs {
            if s >= g.len() || t >= g.len() || !g.composable(s, t) {
                return Err(format!("coefficient on non-composable pair ({s}, {t})"));
            }
            if v.len() != cp.system().target_fiber(s).dim() {
                return Err(format!("coefficient at ({s}, {t}) has wrong length"));
            }
        }
        Ok(())
    }
}

fn parts(cp: &CrossedProduct, r: &[Elem]) -> Vec<(usize, Vec<Elem>)> {
    let f = cp.field();
    cp.groupoid().arrows().map(|s| (s, cp.coefficient(r, s))).filter(|(_, a)| !vector::is_zero(f, a)).collect()
}

fn accumulate(cp: &CrossedProduct, out: &mut BTreeMap<(usize, usize), Vec<Elem>>, key: (usize, usize), v: Vec<Elem>) {
    let f = cp.field();
    match out.get_mut(&key) {
        Some(w) => *w = vector::add(f, w, &v),
        None => {
            out.insert(key, v);
        }
    }
}

/// `x ⊗ y` for arbitrary `x, y ∈ R`.
pub fn simple(cp: &CrossedProduct, x: &[Elem], y: &[Elem]) -> TensorElement {
    let sys = cp.system();
    let g = cp.groupoid();
    let mut out = BTreeMap::new();
    for (s, a) in parts(cp, x) {
        let fib = sys.target_fiber(s);
        for (t, b) in parts(cp, y) {
            if g.composable(s, t) {
                accumulate(cp, &mut out, (s, t), fib.mul(&a, &sys.alpha(s, &b)));
            }
        }
    }
    TensorElement { coeffs: out }.normalized(cp)
}

/// `r · x`.
pub fn left_mul(cp: &CrossedProduct, r: &[Elem], x: &TensorElement) -> TensorElement {
    let sys = cp.system();
    let g = cp.groupoid();
    let mut out = BTreeMap::new();
    for (p, b) in parts(cp, r) {
        let fib = sys.target_fiber(p);
        for (&(s, t), a) in &x.coeffs {
            if let Some(ps) = g.compose(p, s) {
                let c = fib.mul(&fib.mul(&b, &sys.alpha(p, a)), sys.beta(p, s));
                accumulate(cp, &mut out, (ps, t), c);
            }
        }
    }
    TensorElement { coeffs: out }.normalized(cp)
}

/// `x · r`.
pub fn right_mul(cp: &CrossedProduct, x: &TensorElement, r: &[Elem]) -> TensorElement {
    let sys = cp.system();
    let g = cp.groupoid();
    let mut out = BTreeMap::new();
    for (&(s, t), a) in &x.coeffs {
        let fib_s = sys.target_fiber(s);
        let fib_t = sys.target_fiber(t);
        for (p, b) in parts(cp, r) {
            if let Some(tp) = g.compose(t, p) {
                let inner = fib_t.mul(&sys.alpha(t, &b), sys.beta(t, p));
                accumulate(cp, &mut out, (s, tp), fib_s.mul(a, &sys.alpha(s, &inner)));
            }
        }
    }
    TensorElement { coeffs: out }.normalized(cp)
}

/// Multiplication `R ⊗_{R₀} R → R`.
pub fn mu(cp: &CrossedProduct, x: &TensorElement) -> Vec<Elem> {
    let sys = cp.system();
    let g = cp.groupoid();
    let mut out = cp.algebra().zero();
    for (&(s, t), a) in &x.coeffs {
        let st = g.compose(s, t).expect("normal form keys are composable");
        let c = sys.target_fiber(s).mul(a, sys.beta(s, t));
        out = cp.algebra().add(&out, &cp.element(st, &c));
    }
    out
}

/// `w_σ = β_{σ,σ⁻¹}⁻¹ u_σ ⊗ u_{σ⁻¹}`.
pub fn w(cp: &CrossedProduct, s: usize) -> TensorElement {
    let (r, _) = cp.canonical_section(s);
    TensorElement::term(s, cp.groupoid().inv(s), cp.coefficient(&r, s))
}
