//! Sparse exact matrices and incremental row echelon forms over a field.

use std::collections::BTreeMap;

use crate::poly::accumulate;
use crate::scalar::Scalar;

/// Sparse vector: index → nonzero entry.
pub type SparseVec<S> = BTreeMap<usize, S>;

/// `v ← v + c·w`.
pub fn axpy<S: Scalar>(v: &mut SparseVec<S>, c: &S, w: &SparseVec<S>) {
    for (&k, x) in w {
        accumulate(v, k, c.clone() * x.clone());
    }
}

/// Column-major sparse matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct ExactMatrix<S> {
    rows: usize,
    columns: Vec<SparseVec<S>>,
}

impl<S: Scalar> ExactMatrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix { rows, columns: vec![SparseVec::new(); cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for (i, col) in m.columns.iter_mut().enumerate() {
            col.insert(i, S::one());
        }
        m
    }

    pub fn from_columns(rows: usize, columns: Vec<SparseVec<S>>) -> Self {
        debug_assert!(columns.iter().all(|c| c.keys().all(|&r| r < rows)));
        ExactMatrix { rows, columns }
    }

    pub fn from_dense(rows: &[Vec<S>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut m = Self::zeros(nrows, ncols);
        for (i, row) in rows.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn column(&self, j: usize) -> &SparseVec<S> {
        &self.columns[j]
    }

    pub fn columns(&self) -> &[SparseVec<S>] {
        &self.columns
    }

    pub fn get(&self, i: usize, j: usize) -> S {
        self.columns[j].get(&i).cloned().unwrap_or_else(S::zero)
    }

    pub fn set(&mut self, i: usize, j: usize, x: S) {
        if x.is_zero() {
            self.columns[j].remove(&i);
        } else {
            self.columns[j].insert(i, x);
        }
    }

    /// `(row, col, entry)` in column-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &S)> {
        self.columns.iter().enumerate().flat_map(|(j, c)| c.iter().map(move |(&i, x)| (i, j, x)))
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(|c| c.len()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(|c| c.is_empty())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols(), self.rows);
        for (i, j, x) in self.entries() {
            t.columns[i].insert(j, x.clone());
        }
        t
    }

    pub fn apply(&self, v: &SparseVec<S>) -> SparseVec<S> {
        let mut out = SparseVec::new();
        for (&j, c) in v {
            axpy(&mut out, c, &self.columns[j]);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols(), other.rows, "dimension mismatch");
        ExactMatrix { rows: self.rows, columns: other.columns.iter().map(|c| self.apply(c)).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols()), (other.rows, other.cols()), "dimension mismatch");
        let mut out = self.clone();
        for (col, oc) in out.columns.iter_mut().zip(&other.columns) {
            axpy(col, &S::one(), oc);
        }
        out
    }

    pub fn rank(&self) -> usize {
        let mut ech = Echelon::new(false);
        for c in &self.columns {
            ech.insert(c.clone());
        }
        ech.rank()
    }

    /// Basis of the null space, one vector per dependent column.
    pub fn kernel(&self) -> Vec<SparseVec<S>> {
        let mut ech = Echelon::new(true);
        self.columns.iter().filter_map(|c| ech.insert(c.clone())).collect()
    }

    /// Coordinates `x` with `M x = y`, or the nonzero residue of `y`.
    pub fn solve(&self, y: &SparseVec<S>) -> Result<SparseVec<S>, SparseVec<S>> {
        let mut ech = Echelon::new(true);
        for c in &self.columns {
            ech.insert(c.clone());
        }
        ech.express(y)
    }
}

/// Row echelon form built one vector at a time. Each stored row has leading
/// entry 1 at its smallest index; with tracking enabled, rows also carry
/// their expression in the inserted vectors.
#[derive(Clone, Debug)]
pub struct Echelon<S> {
    track: bool,
    inserted: usize,
    pivots: BTreeMap<usize, (SparseVec<S>, SparseVec<S>)>,
}

impl<S: Scalar> Echelon<S> {
    pub fn new(track: bool) -> Self {
        Echelon { track, inserted: 0, pivots: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn inserted(&self) -> usize {
        self.inserted
    }

    fn reduce(&self, v: &mut SparseVec<S>, combo: &mut SparseVec<S>) {
        let mut floor = 0;
        loop {
            let Some((k, c)) = v.range(floor..).next().map(|(&k, c)| (k, c.clone())) else {
                return;
            };
            match self.pivots.get(&k) {
                Some((row, rc)) => {
                    let f = -c;
                    axpy(v, &f, row);
                    if self.track {
                        axpy(combo, &f, rc);
                    }
                }
                None => floor = k + 1,
            }
        }
    }

    /// Inserts `v`; returns the dependency `Σ c_i v_i = 0` (with coefficient 1
    /// on `v`) when `v` lies in the span of earlier vectors and tracking is on.
    pub fn insert(&mut self, mut v: SparseVec<S>) -> Option<SparseVec<S>> {
        let tag = self.inserted;
        self.inserted += 1;
        let mut combo = SparseVec::new();
        if self.track {
            combo.insert(tag, S::one());
        }
        self.reduce(&mut v, &mut combo);
        let Some((&lead, c)) = v.iter().next() else {
            return self.track.then_some(combo);
        };
        let inv = S::one() / c.clone();
        for x in v.values_mut() {
            *x = x.clone() * inv.clone();
        }
        for x in combo.values_mut() {
            *x = x.clone() * inv.clone();
        }
        self.pivots.insert(lead, (v, combo));
        None
    }

    /// Whether `v` lies in the span.
    pub fn contains(&self, v: &SparseVec<S>) -> bool {
        let mut v = v.clone();
        let mut combo = SparseVec::new();
        self.reduce(&mut v, &mut combo);
        v.is_empty()
    }

    /// Coefficients over the inserted vectors, or the residue.
    pub fn express(&self, v: &SparseVec<S>) -> Result<SparseVec<S>, SparseVec<S>> {
        assert!(self.track, "express requires tracking");
        let mut v = v.clone();
        let mut combo = SparseVec::new();
        self.reduce(&mut v, &mut combo);
        if v.is_empty() {
            Ok(combo.into_iter().map(|(k, c)| (k, -c)).collect())
        } else {
            Err(v)
        }
    }
}
