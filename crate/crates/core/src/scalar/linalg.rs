//! Exact Gauss-Jordan elimination. Pivot choice is always the first nonzero
//! entry, so every result is deterministic.

use super::{vector, Elem, Field, ScalarError};

/// Row-major matrix over a field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Elem>,
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: &Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(cols: usize, rows: Vec<Vec<Elem>>) -> Result<Self, ScalarError> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for (i, r) in rows.into_iter().enumerate() {
            if r.len() != cols {
                return Err(ScalarError::DimensionMismatch(format!("row {i} has {} entries, expected {cols}", r.len())));
            }
            data.extend(r);
        }
        Ok(Self { rows: n, cols, data })
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, cols: &[Vec<Elem>]) -> Result<Self, ScalarError> {
        let mut data = Vec::with_capacity(rows * cols.len());
        for i in 0..rows {
            for (j, c) in cols.iter().enumerate() {
                if c.len() != rows {
                    return Err(ScalarError::DimensionMismatch(format!("column {j} has {} entries, expected {rows}", c.len())));
                }
                data.push(c[i].clone());
            }
        }
        Ok(Self { rows, cols: cols.len(), data })
    }

    pub fn get(&self, i: usize, j: usize) -> &Elem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Elem> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Elem>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        Self { rows: self.cols, cols: self.rows, data }
    }

    pub fn mul_vec(&self, field: &Field, v: &[Elem]) -> Result<Vec<Elem>, ScalarError> {
        if v.len() != self.cols {
            return Err(ScalarError::DimensionMismatch(format!("{}x{} matrix times vector of length {}", self.rows, self.cols, v.len())));
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = field.zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !field.is_zero(a) && !field.is_zero(b) {
                        field.add_mul_assign(&mut acc, a, b);
                    }
                }
                acc
            })
            .collect())
    }

    pub fn mul(&self, field: &Field, other: &Matrix) -> Result<Matrix, ScalarError> {
        if self.cols != other.rows {
            return Err(ScalarError::DimensionMismatch(format!("{}x{} times {}x{}", self.rows, self.cols, other.rows, other.cols)));
        }
        let mut out = Matrix::zeros(field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if field.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !field.is_zero(b) {
                        let idx = i * out.cols + j;
                        field.add_mul_assign(&mut out.data[idx], a, b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn is_identity(&self, field: &Field) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = self.get(i, j);
                    if i == j {
                        field.is_one(x)
                    } else {
                        field.is_zero(x)
                    }
                })
            })
    }
}

/// Incrementally maintained reduced row echelon basis of a row space.
#[derive(Clone, Debug)]
pub struct RowSpace {
    field: Field,
    cols: usize,
    rows: Vec<Vec<Elem>>,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn new(field: &Field, cols: usize) -> Self {
        Self { field: field.clone(), cols, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn basis(&self) -> &[Vec<Elem>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn into_basis(self) -> Vec<Vec<Elem>> {
        self.rows
    }

    /// Remainder of `v` after elimination against the current basis.
    pub fn reduce(&self, v: &[Elem]) -> Vec<Elem> {
        let f = &self.field;
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !f.is_zero(&v[p]) {
                let c = f.neg(&v[p]);
                vector::axpy(f, &mut v, &c, row);
            }
        }
        v
    }

    pub fn contains(&self, v: &[Elem]) -> bool {
        vector::is_zero(&self.field, &self.reduce(v))
    }

    /// Adds `v` to the space. Returns `true` if the dimension grew.
    pub fn insert(&mut self, v: &[Elem]) -> bool {
        assert_eq!(v.len(), self.cols, "row length mismatch");
        let f = self.field.clone();
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let inv = f.inv(&r[p]).expect("pivot is nonzero");
        r = vector::scale(&f, &inv, &r);
        for row in self.rows.iter_mut() {
            if !f.is_zero(&row[p]) {
                let c = f.neg(&row[p]);
                vector::axpy(&f, row, &c, &r);
            }
        }
        let pos = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(pos, p);
        self.rows.insert(pos, r);
        true
    }

    /// Basis of the null space of the row space viewed as a coefficient
    /// matrix: all `x` with `row . x = 0` for every row.
    pub fn null_space(&self) -> Vec<Vec<Elem>> {
        let f = &self.field;
        let mut is_pivot = vec![false; self.cols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let mut out = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut x = vector::zeros(f, self.cols);
            x[free] = f.one();
            for (row, &p) in self.rows.iter().zip(&self.pivots) {
                x[p] = f.neg(&row[free]);
            }
            out.push(x);
        }
        out
    }

    /// Coordinates of `v` with respect to the echelon basis, if `v` lies in
    /// the space.
    pub fn coordinates(&self, v: &[Elem]) -> Option<Vec<Elem>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }
}

/// Reduced row echelon form and pivot columns.
pub fn row_reduce(field: &Field, a: &Matrix) -> (Matrix, Vec<usize>) {
    let mut rs = RowSpace::new(field, a.cols);
    for i in 0..a.rows {
        rs.insert(a.row(i));
    }
    let pivots = rs.pivots.clone();
    let mut rows = rs.into_basis();
    let rank = rows.len();
    rows.extend((rank..a.rows).map(|_| vector::zeros(field, a.cols)));
    (Matrix::from_rows(a.cols, rows).expect("rows have matrix width"), pivots)
}

pub fn rank(field: &Field, a: &Matrix) -> usize {
    row_reduce(field, a).1.len()
}

/// Basis of `{x : A x = 0}`.
pub fn kernel(field: &Field, a: &Matrix) -> Vec<Vec<Elem>> {
    let mut rs = RowSpace::new(field, a.cols);
    for i in 0..a.rows {
        rs.insert(a.row(i));
    }
    rs.null_space()
}

/// Solution set of `A x = b`: a particular solution (free variables zero)
/// plus a kernel basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSolution {
    pub particular: Vec<Elem>,
    pub kernel: Vec<Vec<Elem>>,
}

impl LinearSolution {
    pub fn is_unique(&self) -> bool {
        self.kernel.is_empty()
    }
}

/// Solves `A x = b`; `Ok(None)` when inconsistent.
pub fn solve(field: &Field, a: &Matrix, b: &[Elem]) -> Result<Option<LinearSolution>, ScalarError> {
    if b.len() != a.rows {
        return Err(ScalarError::DimensionMismatch(format!("{} equations but right-hand side of length {}", a.rows, b.len())));
    }
    let mut sys = LinearSystem::new(field, a.cols);
    for (i, bi) in b.iter().enumerate() {
        sys.push(a.row(i), bi);
    }
    Ok(sys.solve())
}

/// A linear system assembled one equation at a time and reduced on the fly,
/// so very tall systems never need to be stored.
#[derive(Clone, Debug)]
pub struct LinearSystem {
    unknowns: usize,
    augmented: RowSpace,
}

impl LinearSystem {
    pub fn new(field: &Field, unknowns: usize) -> Self {
        Self { unknowns, augmented: RowSpace::new(field, unknowns + 1) }
    }

    pub fn unknowns(&self) -> usize {
        self.unknowns
    }

    /// Adds the equation `coeffs . x = rhs`.
    pub fn push(&mut self, coeffs: &[Elem], rhs: &Elem) {
        assert_eq!(coeffs.len(), self.unknowns, "equation length mismatch");
        let mut row = coeffs.to_vec();
        row.push(rhs.clone());
        self.augmented.insert(&row);
    }

    pub fn solve(&self) -> Option<LinearSolution> {
        let f = &self.augmented.field;
        let n = self.unknowns;
        if self.augmented.pivots.last() == Some(&n) {
            return None;
        }
        let mut particular = vector::zeros(f, n);
        for (row, &p) in self.augmented.rows.iter().zip(&self.augmented.pivots) {
            particular[p] = row[n].clone();
        }
        let mut is_pivot = vec![false; n];
        for &p in &self.augmented.pivots {
            is_pivot[p] = true;
        }
        let mut kernel = Vec::new();
        for free in (0..n).filter(|&c| !is_pivot[c]) {
            let mut x = vector::zeros(f, n);
            x[free] = f.one();
            for (row, &p) in self.augmented.rows.iter().zip(&self.augmented.pivots) {
                x[p] = f.neg(&row[free]);
            }
            kernel.push(x);
        }
        Some(LinearSolution { particular, kernel })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(field: &Field, rows: &[&[i64]]) -> Matrix {
        let cols = rows[0].len();
        Matrix::from_rows(cols, rows.iter().map(|r| r.iter().map(|&x| field.from_i64(x)).collect()).collect()).unwrap()
    }

    fn v(field: &Field, xs: &[i64]) -> Vec<Elem> {
        xs.iter().map(|&x| field.from_i64(x)).collect()
    }

    #[test]
    fn identity_system_returns_rhs() {
        let f = Field::Rational;
        let a = Matrix::identity(&f, 3);
        let b = v(&f, &[4, -1, 7]);
        let sol = solve(&f, &a, &b).unwrap().unwrap();
        assert_eq!(sol.particular, b);
        assert!(sol.is_unique());
    }

    #[test]
    fn underdetermined_over_gf2() {
        let f = Field::prime(2).unwrap();
        let a = m(&f, &[&[1, 1]]);
        let sol = solve(&f, &a, &v(&f, &[1])).unwrap().unwrap();
        assert_eq!(sol.kernel.len(), 1);
        assert_eq!(a.mul_vec(&f, &sol.particular).unwrap(), v(&f, &[1]));
        assert_eq!(a.mul_vec(&f, &sol.kernel[0]).unwrap(), v(&f, &[0]));
    }

    #[test]
    fn inconsistent_singular_system() {
        let f = Field::Rational;
        let a = m(&f, &[&[1, 2], &[2, 4]]);
        assert_eq!(solve(&f, &a, &v(&f, &[1, 3])).unwrap(), None);
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let f = Field::Rational;
        let a = Matrix::identity(&f, 2);
        assert!(matches!(solve(&f, &a, &v(&f, &[1])), Err(ScalarError::DimensionMismatch(_))));
    }

    #[test]
    fn kernel_and_rank() {
        let f = Field::Rational;
        let a = m(&f, &[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank(&f, &a), 2);
        let k = kernel(&f, &a);
        assert_eq!(k.len(), 1);
        assert!(vector::is_zero(&f, &a.mul_vec(&f, &k[0]).unwrap()));
    }
}
