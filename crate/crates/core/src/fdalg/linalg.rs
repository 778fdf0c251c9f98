//! Dense exact linear algebra over a [`Field`]: row reduction, null spaces
//! and subspaces in reduced row echelon form.

use crate::arith::Field;

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat<E> {
    nrows: usize,
    ncols: usize,
    data: Vec<E>,
}

impl<E: Clone> Mat<E> {
    pub fn zeros<F: Field<Elem = E>>(field: &F, nrows: usize, ncols: usize) -> Self {
        Mat { nrows, ncols, data: vec![field.zero(); nrows * ncols] }
    }

    pub fn identity<F: Field<Elem = E>>(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns<F: Field<Elem = E>>(field: &F, nrows: usize, cols: &[Vec<E>]) -> Self {
        let mut m = Self::zeros(field, nrows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for (i, e) in c.iter().enumerate() {
                m.set(i, j, e.clone());
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.data[i * self.ncols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, e: E) {
        self.data[i * self.ncols + j] = e;
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.ncols..(i + 1) * self.ncols]
    }

    pub fn column(&self, j: usize) -> Vec<E> {
        (0..self.nrows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<E>> {
        (0..self.ncols).map(|j| self.column(j)).collect()
    }

    /// Entries in row-major order.
    pub fn flatten(&self) -> &[E] {
        &self.data
    }

    pub fn apply<F: Field<Elem = E>>(&self, field: &F, v: &[E]) -> Vec<E> {
        (0..self.nrows).map(|i| dot(field, self.row(i), v)).collect()
    }

    pub fn mul<F: Field<Elem = E>>(&self, field: &F, other: &Mat<E>) -> Mat<E> {
        assert_eq!(self.ncols, other.nrows, "dimension mismatch");
        let mut out = Mat::zeros(field, self.nrows, other.ncols);
        for i in 0..self.nrows {
            for k in 0..self.ncols {
                let a = self.get(i, k);
                if field.is_zero(a) {
                    continue;
                }
                for j in 0..other.ncols {
                    let b = other.get(k, j);
                    if !field.is_zero(b) {
                        let v = field.add(out.get(i, j), &field.mul(a, b));
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    pub fn is_zero<F: Field<Elem = E>>(&self, field: &F) -> bool {
        self.data.iter().all(|e| field.is_zero(e))
    }
}

pub fn dot<F: Field>(field: &F, a: &[F::Elem], b: &[F::Elem]) -> F::Elem {
    a.iter().zip(b).fold(field.zero(), |acc, (x, y)| {
        if field.is_zero(x) || field.is_zero(y) {
            acc
        } else {
            field.add(&acc, &field.mul(x, y))
        }
    })
}

/// Reduces `rows` to reduced row echelon form in place, dropping zero rows;
/// returns the pivot column of each remaining row.
pub fn rref<F: Field>(field: &F, rows: &mut Vec<Vec<F::Elem>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !field.is_zero(&rows[i][c])) else {
            continue;
        };
        rows.swap(r, p);
        let inv = field.inv(&rows[r][c]).expect("nonzero pivot");
        for e in rows[r].iter_mut() {
            *e = field.mul(e, &inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || field.is_zero(&row[c]) {
                continue;
            }
            let f = row[c].clone();
            for (e, p) in row.iter_mut().zip(&pivot_row).skip(c) {
                if !field.is_zero(p) {
                    *e = field.sub(e, &field.mul(&f, p));
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// Basis of `{x : A x = 0}` for `A` given by its rows.
pub fn nullspace<F: Field>(field: &F, mut rows: Vec<Vec<F::Elem>>, ncols: usize) -> Vec<Vec<F::Elem>> {
    let pivots = rref(field, &mut rows, ncols);
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..ncols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut x = vec![field.zero(); ncols];
            x[f] = field.one();
            for (row, &p) in rows.iter().zip(&pivots) {
                x[p] = field.neg(&row[f]);
            }
            x
        })
        .collect()
}

/// A subspace of `k^n`, stored as its reduced row echelon basis; equal
/// subspaces have equal representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace<E> {
    ambient: usize,
    basis: Vec<Vec<E>>,
    pivots: Vec<usize>,
}

impl<E: Clone + PartialEq> Subspace<E> {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn whole<F: Field<Elem = E>>(field: &F, ambient: usize) -> Self {
        Self::span(field, ambient, Mat::identity(field, ambient).columns())
    }

    pub fn span<F: Field<Elem = E>>(field: &F, ambient: usize, mut vectors: Vec<Vec<E>>) -> Self {
        let pivots = rref(field, &mut vectors, ambient);
        Subspace { ambient, basis: vectors, pivots }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<E>] {
        &self.basis
    }

    /// `v` minus its projection along the basis onto the pivot coordinates.
    pub fn reduce<F: Field<Elem = E>>(&self, field: &F, v: &[E]) -> Vec<E> {
        let mut out = v.to_vec();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            if field.is_zero(&out[p]) {
                continue;
            }
            let f = out[p].clone();
            for (o, x) in out.iter_mut().zip(b) {
                if !field.is_zero(x) {
                    *o = field.sub(o, &field.mul(&f, x));
                }
            }
        }
        out
    }

    pub fn contains<F: Field<Elem = E>>(&self, field: &F, v: &[E]) -> bool {
        self.reduce(field, v).iter().all(|e| field.is_zero(e))
    }

    pub fn contains_subspace<F: Field<Elem = E>>(&self, field: &F, other: &Subspace<E>) -> bool {
        other.basis.iter().all(|v| self.contains(field, v))
    }

    /// Coordinates of a member of the subspace in the stored basis.
    pub fn coordinates(&self, v: &[E]) -> Vec<E> {
        self.pivots.iter().map(|&p| v[p].clone()).collect()
    }

    pub fn sum<F: Field<Elem = E>>(&self, field: &F, other: &Subspace<E>) -> Self {
        let mut vs = self.basis.clone();
        vs.extend(other.basis.iter().cloned());
        Self::span(field, self.ambient, vs)
    }

    /// Coordinates not used as pivots: the unit vectors there span a
    /// complement.
    pub fn complement_indices(&self) -> Vec<usize> {
        (0..self.ambient).filter(|i| !self.pivots.contains(i)).collect()
    }
}
