//! Finite groupoids as explicit tables.
//!
//! Arrows are dense indices `0..len`. Objects are identified with their
//! identity arrows, so `src(σ)` and `dst(σ)` are themselves arrow indices.
//! Composition `comp(σ, τ)` means "σ after τ" and is defined exactly when
//! `src(σ) = dst(τ)`; undefined composition is an absent key.

use crate::report::ValidationReport;
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupoidError {
    #[error("table {table} references arrow {index} but only {len} arrows exist")]
    DanglingIndex { table: &'static str, index: usize, len: usize },
    #[error("table {table} has length {got}, expected {expected}")]
    Length { table: &'static str, got: usize, expected: usize },
    #[error("composition of ({0}, {1}) given twice")]
    DuplicateComposition(usize, usize),
    #[error("{0} is not an object")]
    NotAnObject(usize),
    #[error("object set is empty")]
    EmptyObjectSet,
    #[error("index set is empty")]
    EmptyIndexSet,
    #[error("not a group table: {0}")]
    NotAGroup(String),
    #[error("not a valid groupoid:\n{0}")]
    Invalid(ValidationReport),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroupoid {
    labels: Vec<String>,
    inv: Vec<usize>,
    src: Vec<usize>,
    dst: Vec<usize>,
    comp: BTreeMap<(usize, usize), usize>,
    objects: Vec<usize>,
}

/// Partition of the objects into connected components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentPartition {
    pub classes: Vec<Vec<usize>>,
    /// Least object of each class, in the same order as `classes`.
    pub representatives: Vec<usize>,
}

impl ComponentPartition {
    pub fn class_of(&self, object: usize) -> Option<usize> {
        self.classes.iter().position(|c| c.contains(&object))
    }

    pub fn representative_of(&self, object: usize) -> Option<usize> {
        self.class_of(object).map(|i| self.representatives[i])
    }
}

/// A subgroupoid together with the original index of each of its arrows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Restriction {
    pub groupoid: FiniteGroupoid,
    pub embedding: Vec<usize>,
}

impl FiniteGroupoid {
    /// Builds a groupoid from raw tables. Only index consistency is checked
    /// here; the axioms are checked by [`validate`](Self::validate).
    pub fn from_tables(
        labels: Vec<String>,
        inv: Vec<usize>,
        src: Vec<usize>,
        dst: Vec<usize>,
        comp: impl IntoIterator<Item = (usize, usize, usize)>,
    ) -> Result<Self, GroupoidError> {
        let n = labels.len();
        for (table, v) in [("inv", &inv), ("src", &src), ("dst", &dst)] {
            if v.len() != n {
                return Err(GroupoidError::Length { table, got: v.len(), expected: n });
            }
            if let Some(&index) = v.iter().find(|&&i| i >= n) {
                return Err(GroupoidError::DanglingIndex { table, index, len: n });
            }
        }
        let mut table = BTreeMap::new();
        for (s, t, st) in comp {
            for index in [s, t, st] {
                if index >= n {
                    return Err(GroupoidError::DanglingIndex { table: "comp", index, len: n });
                }
            }
            if table.insert((s, t), st).is_some() {
                return Err(GroupoidError::DuplicateComposition(s, t));
            }
        }
        let objects: BTreeSet<usize> = src.iter().chain(&dst).copied().collect();
        Ok(Self { labels, inv, src, dst, comp: table, objects: objects.into_iter().collect() })
    }

    /// Builds and validates.
    pub fn from_tables_checked(
        labels: Vec<String>,
        inv: Vec<usize>,
        src: Vec<usize>,
        dst: Vec<usize>,
        comp: impl IntoIterator<Item = (usize, usize, usize)>,
    ) -> Result<Self, GroupoidError> {
        let g = Self::from_tables(labels, inv, src, dst, comp)?;
        let report = g.validate();
        if !report.is_ok() {
            return Err(GroupoidError::Invalid(report));
        }
        Ok(g)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn arrows(&self) -> std::ops::Range<usize> {
        0..self.len()
    }

    pub fn label(&self, s: usize) -> &str {
        &self.labels[s]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn arrow_by_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn inv(&self, s: usize) -> usize {
        self.inv[s]
    }

    pub fn src(&self, s: usize) -> usize {
        self.src[s]
    }

    pub fn dst(&self, s: usize) -> usize {
        self.dst[s]
    }

    pub fn compose(&self, s: usize, t: usize) -> Option<usize> {
        self.comp.get(&(s, t)).copied()
    }

    pub fn composition_table(&self) -> &BTreeMap<(usize, usize), usize> {
        &self.comp
    }

    pub fn objects(&self) -> &[usize] {
        &self.objects
    }

    pub fn is_object(&self, s: usize) -> bool {
        self.objects.binary_search(&s).is_ok()
    }

    pub fn composable(&self, s: usize, t: usize) -> bool {
        self.src[s] == self.dst[t]
    }

    pub fn composable_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for s in self.arrows() {
            for t in self.arrows() {
                if self.composable(s, t) {
                    out.push((s, t));
                }
            }
        }
        out
    }

    pub fn composable_triples(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for (s, t) in self.composable_pairs() {
            for u in self.arrows() {
                if self.composable(t, u) {
                    out.push((s, t, u));
                }
            }
        }
        out
    }

    /// Arrows `σ` with `src(σ) = from` and `dst(σ) = to`, ascending.
    pub fn arrows_between(&self, from: usize, to: usize) -> Vec<usize> {
        self.arrows().filter(|&s| self.src[s] == from && self.dst[s] == to).collect()
    }

    /// Checks every groupoid axiom and reports each violation with a witness.
    pub fn validate(&self) -> ValidationReport {
        let mut r = ValidationReport::new();
        for s in self.arrows() {
            if self.inv[self.inv[s]] != s {
                r.push("involution", vec![s], format!("inv(inv({s})) = {}", self.inv[self.inv[s]]));
            }
        }
        for &e in &self.objects {
            if self.src[e] != e || self.dst[e] != e {
                r.push("objects", vec![e], format!("object {e} is not its own source and target"));
            }
        }
        for s in self.arrows() {
            for t in self.arrows() {
                match (self.composable(s, t), self.compose(s, t)) {
                    (true, None) => r.push("composability", vec![s, t], format!("src({s}) = dst({t}) but composition undefined")),
                    (false, Some(_)) => r.push("composability", vec![s, t], format!("composition defined although src({s}) != dst({t})")),
                    (true, Some(st)) => {
                        if self.src[st] != self.src[t] || self.dst[st] != self.dst[s] {
                            r.push("composability", vec![s, t], format!("composite {st} has wrong endpoints"));
                        }
                    }
                    (false, None) => {}
                }
            }
        }
        for s in self.arrows() {
            for t in self.arrows() {
                let Some(st) = self.compose(s, t) else { continue };
                for u in self.arrows() {
                    let Some(tu) = self.compose(t, u) else { continue };
                    let left = self.compose(st, u);
                    let right = self.compose(s, tu);
                    if left.is_none() || left != right {
                        r.push("associativity", vec![s, t, u], format!("({s}{t}){u} = {left:?} but {s}({t}{u}) = {right:?}"));
                    }
                }
            }
        }
        for s in self.arrows() {
            let d = self.src[s];
            let ok = self.compose(self.inv[s], s) == Some(d) && self.compose(s, d) == Some(s);
            if !ok {
                r.push(
                    "domain",
                    vec![s],
                    format!("inv({s}){s} = {:?}, {s}*src({s}) = {:?}", self.compose(self.inv[s], s), self.compose(s, d)),
                );
            }
            let c = self.dst[s];
            let ok = self.compose(s, self.inv[s]) == Some(c) && self.compose(c, s) == Some(s);
            if !ok {
                r.push(
                    "range",
                    vec![s],
                    format!("{s}inv({s}) = {:?}, dst({s})*{s} = {:?}", self.compose(s, self.inv[s]), self.compose(c, s)),
                );
            }
        }
        r
    }

    /// Subgroupoid of all arrows with both endpoints in `objects`.
    pub fn restrict_with_embedding(&self, objects: &[usize]) -> Result<Restriction, GroupoidError> {
        if objects.is_empty() {
            return Err(GroupoidError::EmptyObjectSet);
        }
        for &e in objects {
            if !self.is_object(e) {
                return Err(GroupoidError::NotAnObject(e));
            }
        }
        let keep: BTreeSet<usize> = objects.iter().copied().collect();
        let embedding: Vec<usize> = self.arrows().filter(|&s| keep.contains(&self.src[s]) && keep.contains(&self.dst[s])).collect();
        Ok(Restriction { groupoid: self.subgroupoid_on(&embedding), embedding })
    }

    pub fn restrict_to_objects(&self, objects: &[usize]) -> Result<FiniteGroupoid, GroupoidError> {
        Ok(self.restrict_with_embedding(objects)?.groupoid)
    }

    /// The isotropy group `{σ : src(σ) = dst(σ) = e}` as a one-object groupoid.
    pub fn isotropy_group(&self, e: usize) -> Result<FiniteGroupoid, GroupoidError> {
        self.restrict_to_objects(&[e])
    }

    /// Arrows of the isotropy group at `e`, as indices of `self`.
    pub fn isotropy_arrows(&self, e: usize) -> Vec<usize> {
        self.arrows_between(e, e)
    }

    /// Reindexes a subset of arrows closed under inverses and composition.
    pub fn subgroupoid_on(&self, arrows: &[usize]) -> FiniteGroupoid {
        let index: BTreeMap<usize, usize> = arrows.iter().enumerate().map(|(i, &s)| (s, i)).collect();
        let map = |s: usize| index[&s];
        let labels = arrows.iter().map(|&s| self.labels[s].clone()).collect();
        let inv = arrows.iter().map(|&s| map(self.inv[s])).collect();
        let src = arrows.iter().map(|&s| map(self.src[s])).collect();
        let dst = arrows.iter().map(|&s| map(self.dst[s])).collect();
        let comp: Vec<(usize, usize, usize)> = self
            .comp
            .iter()
            .filter(|((s, t), _)| index.contains_key(s) && index.contains_key(t))
            .map(|(&(s, t), &st)| (map(s), map(t), map(st)))
            .collect();
        FiniteGroupoid::from_tables(labels, inv, src, dst, comp).expect("subset of a valid table")
    }

    /// Connected components; each representative is the least object index
    /// of its class.
    pub fn connected_components(&self) -> ComponentPartition {
        let mut parent: BTreeMap<usize, usize> = self.objects.iter().map(|&e| (e, e)).collect();
        fn find(parent: &mut BTreeMap<usize, usize>, x: usize) -> usize {
            let p = parent[&x];
            if p == x {
                return x;
            }
            let root = find(parent, p);
            parent.insert(x, root);
            root
        }
        for s in self.arrows() {
            let a = find(&mut parent, self.src[s]);
            let b = find(&mut parent, self.dst[s]);
            if a != b {
                let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                parent.insert(hi, lo);
            }
        }
        let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for &e in &self.objects {
            let root = find(&mut parent, e);
            classes.entry(root).or_default().push(e);
        }
        let mut classes: Vec<Vec<usize>> = classes.into_values().collect();
        classes.sort_by_key(|c| c[0]);
        let representatives = classes.iter().map(|c| c[0]).collect();
        ComponentPartition { classes, representatives }
    }

    /// The pair groupoid `I × I` on `n` indices. Arrow `(i, j)` has index
    /// `i * n + j`, source `(j, j)` and target `(i, i)`.
    pub fn pair(n: usize) -> Result<FiniteGroupoid, GroupoidError> {
        if n == 0 {
            return Err(GroupoidError::EmptyIndexSet);
        }
        let idx = |i: usize, j: usize| i * n + j;
        let mut labels = Vec::new();
        let mut inv = Vec::new();
        let mut src = Vec::new();
        let mut dst = Vec::new();
        for i in 0..n {
            for j in 0..n {
                labels.push(format!("({i},{j})"));
                inv.push(idx(j, i));
                src.push(idx(j, j));
                dst.push(idx(i, i));
            }
        }
        let mut comp = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    comp.push((idx(i, j), idx(j, l), idx(i, l)));
                }
            }
        }
        FiniteGroupoid::from_tables(labels, inv, src, dst, comp)
    }

    /// A group given by its Cayley table (`table[a][b] = a·b`) as a
    /// one-object groupoid. The object is the identity element.
    pub fn group(table: &[Vec<usize>], labels: Option<Vec<String>>) -> Result<FiniteGroupoid, GroupoidError> {
        let n = table.len();
        if n == 0 {
            return Err(GroupoidError::NotAGroup("empty table".into()));
        }
        if table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(GroupoidError::NotAGroup("table is not square or has out-of-range entries".into()));
        }
        let e = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or_else(|| GroupoidError::NotAGroup("no identity element".into()))?;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(GroupoidError::NotAGroup(format!("not associative at ({a},{b},{c})")));
                    }
                }
            }
        }
        let mut inv = Vec::with_capacity(n);
        for (a, row) in table.iter().enumerate() {
            let b =
                (0..n).find(|&b| row[b] == e && table[b][a] == e).ok_or_else(|| GroupoidError::NotAGroup(format!("{a} has no inverse")))?;
            inv.push(b);
        }
        let labels = labels.unwrap_or_else(|| (0..n).map(|a| if a == e { "e".to_string() } else { format!("g{a}") }).collect());
        if labels.len() != n {
            return Err(GroupoidError::Length { table: "labels", got: labels.len(), expected: n });
        }
        let comp = (0..n).flat_map(|a| (0..n).map(move |b| (a, b, table[a][b])));
        FiniteGroupoid::from_tables(labels, inv, vec![e; n], vec![e; n], comp)
    }

    /// Cyclic group of order `n`, element `k` is `g^k`.
    pub fn cyclic(n: usize) -> Result<FiniteGroupoid, GroupoidError> {
        let table: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let labels = (0..n).map(|k| if k == 0 { "e".to_string() } else { format!("g{k}") }).collect();
        FiniteGroupoid::group(&table, Some(labels))
    }

    /// Klein four group `{e, a, b, c}` with `ab = c`.
    pub fn klein_four() -> FiniteGroupoid {
        let table: Vec<Vec<usize>> = (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect();
        let labels = ["e", "a", "b", "c"].iter().map(|s| s.to_string()).collect();
        FiniteGroupoid::group(&table, Some(labels)).expect("Klein four table")
    }

    /// Disjoint union; arrows of the `k`-th summand follow those of the
    /// previous summands and get labels prefixed with `k:`.
    pub fn disjoint_union(parts: &[FiniteGroupoid]) -> Result<FiniteGroupoid, GroupoidError> {
        let mut labels = Vec::new();
        let mut inv = Vec::new();
        let mut src = Vec::new();
        let mut dst = Vec::new();
        let mut comp = Vec::new();
        let mut offset = 0;
        for (k, g) in parts.iter().enumerate() {
            let report = g.validate();
            if !report.is_ok() {
                return Err(GroupoidError::Invalid(report));
            }
            labels.extend(g.labels.iter().map(|l| format!("{k}:{l}")));
            inv.extend(g.inv.iter().map(|x| x + offset));
            src.extend(g.src.iter().map(|x| x + offset));
            dst.extend(g.dst.iter().map(|x| x + offset));
            comp.extend(g.comp.iter().map(|(&(s, t), &st)| (s + offset, t + offset, st + offset)));
            offset += g.len();
        }
        FiniteGroupoid::from_tables(labels, inv, src, dst, comp)
    }

    /// Checks that `f: self → other` (given on arrows) is a groupoid
    /// homomorphism: composable pairs go to composable pairs and products
    /// are preserved.
    pub fn is_homomorphism(&self, other: &FiniteGroupoid, f: &[usize]) -> bool {
        self.comp.iter().all(|(&(s, t), &st)| other.compose(f[s], f[t]) == Some(f[st]))
    }
}
