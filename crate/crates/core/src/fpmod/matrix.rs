use crate::arith::Field;
use crate::poly::{Poly, QuotientRing};

/// A matrix over a quotient ring, stored by columns so that each column is
/// one relation or one map image.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<F: Field> {
    nrows: usize,
    columns: Vec<Vec<Poly<F>>>,
}

impl<F: Field> Matrix<F> {
    pub fn zero(nrows: usize, ncols: usize) -> Self {
        Matrix { nrows, columns: vec![vec![Poly::<F>::zero(); nrows]; ncols] }
    }

    pub fn identity(ring: &QuotientRing<F>, n: usize) -> Self {
        let columns = (0..n)
            .map(|j| (0..n).map(|i| if i == j { ring.one() } else { ring.zero() }).collect())
            .collect();
        Matrix { nrows: n, columns }
    }

    pub fn from_columns(nrows: usize, columns: Vec<Vec<Poly<F>>>) -> Self {
        assert!(columns.iter().all(|c| c.len() == nrows), "ragged columns");
        Matrix { nrows, columns }
    }

    /// Builds a matrix from its rows; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<Poly<F>>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        let mut columns = vec![Vec::with_capacity(nrows); ncols];
        for row in rows {
            for (j, p) in row.into_iter().enumerate() {
                columns[j].push(p);
            }
        }
        Matrix { nrows, columns }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.columns.len()
    }

    pub fn column(&self, j: usize) -> &[Poly<F>] {
        &self.columns[j]
    }

    pub fn columns(&self) -> &[Vec<Poly<F>>] {
        &self.columns
    }

    pub fn entry(&self, i: usize, j: usize) -> &Poly<F> {
        &self.columns[j][i]
    }

    pub fn row(&self, i: usize) -> Vec<Poly<F>> {
        self.columns.iter().map(|c| c[i].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().flatten().all(|p| p.is_zero())
    }

    pub fn transpose(&self) -> Self {
        let columns = (0..self.nrows).map(|i| self.row(i)).collect();
        Matrix { nrows: self.ncols(), columns }
    }

    /// Entries replaced by their normal forms.
    pub fn reduced(&self, ring: &QuotientRing<F>) -> Self {
        let columns = self.columns.iter().map(|c| c.iter().map(|p| ring.reduce(p)).collect()).collect();
        Matrix { nrows: self.nrows, columns }
    }

    pub fn select_columns(&self, keep: &[usize]) -> Self {
        Matrix { nrows: self.nrows, columns: keep.iter().map(|&j| self.columns[j].clone()).collect() }
    }

    pub fn select_rows(&self, keep: &[usize]) -> Self {
        let columns = self.columns.iter().map(|c| keep.iter().map(|&i| c[i].clone()).collect()).collect();
        Matrix { nrows: keep.len(), columns }
    }

    /// `[self | other]`.
    pub fn hcat(&self, other: &Matrix<F>) -> Self {
        assert_eq!(self.nrows, other.nrows, "row counts differ");
        let mut columns = self.columns.clone();
        columns.extend(other.columns.iter().cloned());
        Matrix { nrows: self.nrows, columns }
    }

    pub fn block_diagonal(&self, other: &Matrix<F>) -> Self {
        let nrows = self.nrows + other.nrows;
        let mut columns = Vec::with_capacity(self.ncols() + other.ncols());
        for c in &self.columns {
            let mut col = c.clone();
            col.resize(nrows, Poly::<F>::zero());
            columns.push(col);
        }
        for c in &other.columns {
            let mut col = vec![Poly::<F>::zero(); self.nrows];
            col.extend(c.iter().cloned());
            columns.push(col);
        }
        Matrix { nrows, columns }
    }

    /// `n` copies of `self` along the diagonal.
    pub fn repeat_diagonal(&self, n: usize) -> Self {
        let mut out = Matrix::zero(0, 0);
        for _ in 0..n {
            out = out.block_diagonal(self);
        }
        out
    }

    /// `A * v` for a column vector `v`.
    pub fn apply(&self, ring: &QuotientRing<F>, v: &[Poly<F>]) -> Vec<Poly<F>> {
        assert_eq!(v.len(), self.ncols(), "dimension mismatch");
        let mut out = vec![ring.zero(); self.nrows];
        for (c, x) in self.columns.iter().zip(v) {
            if x.is_zero() {
                continue;
            }
            for (o, a) in out.iter_mut().zip(c) {
                if !a.is_zero() {
                    *o = ring.add(o, &ring.mul(a, x));
                }
            }
        }
        out
    }

    pub fn mul(&self, ring: &QuotientRing<F>, other: &Matrix<F>) -> Self {
        let columns = other.columns.iter().map(|c| self.apply(ring, c)).collect();
        Matrix { nrows: self.nrows, columns }
    }

    /// Rendered entries, row by row.
    pub fn render(&self, ring: &QuotientRing<F>) -> Vec<Vec<String>> {
        (0..self.nrows).map(|i| self.columns.iter().map(|c| ring.render(&c[i])).collect()).collect()
    }
}
