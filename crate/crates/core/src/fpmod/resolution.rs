use std::sync::Arc;

use super::{column_degrees, syzygy_matrix, Matrix, PresentedModule};
use crate::arith::Field;
use crate::error::{Error, Result};
use crate::poly::QuotientRing;

/// `... -> F_2 -> F_1 -> F_0 -> M -> 0`, with `d_k : F_k -> F_{k-1}` stored
/// at index `k - 1`.
#[derive(Clone, Debug)]
pub struct FreeResolution<F: Field> {
    ring: Arc<QuotientRing<F>>,
    differentials: Vec<Matrix<F>>,
    ranks: Vec<usize>,
    degrees: Option<Vec<Vec<i64>>>,
    minimal: bool,
    tail: Matrix<F>,
    terminated: bool,
}

impl<F: Field> FreeResolution<F> {
    pub fn ring(&self) -> &Arc<QuotientRing<F>> {
        &self.ring
    }

    pub fn differentials(&self) -> &[Matrix<F>] {
        &self.differentials
    }

    /// `d_k` for `k >= 1`; a map from the zero module past the end.
    pub fn differential(&self, k: usize) -> Matrix<F> {
        assert!(k >= 1, "differentials start at d_1");
        match self.differentials.get(k - 1) {
            Some(d) => d.clone(),
            None => Matrix::zero(self.rank(k - 1), 0),
        }
    }

    /// Ranks of `F_0, F_1, ...` as far as computed.
    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn rank(&self, k: usize) -> usize {
        self.ranks.get(k).copied().unwrap_or(0)
    }

    /// Degrees of the basis of each `F_k`, in the graded case.
    pub fn graded_betti(&self) -> Option<&[Vec<i64>]> {
        self.degrees.as_deref()
    }

    pub fn is_minimal(&self) -> bool {
        self.minimal
    }

    /// True when the resolution was found to be finite.
    pub fn terminated(&self) -> bool {
        self.terminated
    }

    /// `d_k * d_{k+1} = 0` for every computed pair.
    pub fn is_complex(&self) -> bool {
        self.differentials.windows(2).all(|w| w[0].mul(&self.ring, &w[1]).is_zero())
    }

    /// No entry of any differential is a unit.
    pub fn has_no_unit_entries(&self) -> bool {
        self.differentials.iter().all(|d| d.columns().iter().flatten().all(|p| !self.ring.is_unit(p)))
    }
}

/// Resolution to length `length`, minimal whenever the module has local
/// structure; any free resolution otherwise.
pub(crate) fn free_resolution<F: Field>(m: &PresentedModule<F>, length: usize) -> Result<FreeResolution<F>> {
    let ring = m.ring().clone();
    let minimal = m.has_local_structure();
    let start = m.pruned();
    let mut ranks = vec![start.num_generators()];
    let mut degrees = start.degrees().map(|d| vec![d.to_vec()]);
    let mut differentials = Vec::new();
    let mut cur = start.presentation().clone();
    let mut terminated = false;
    for _ in 0..length {
        if cur.ncols() == 0 {
            terminated = true;
            break;
        }
        let syz = syzygy_matrix(&ring, &cur)?;
        let (next, kept) = PresentedModule::coker(&ring, syz).prune();
        let d = cur.select_columns(&kept);
        degrees = degrees.and_then(|mut ds| {
            let cols = column_degrees(&ring, &d, ds.last().expect("F_0 present"))?;
            ds.push(cols);
            Some(ds)
        });
        ranks.push(d.ncols());
        differentials.push(d);
        cur = next.presentation().clone();
    }
    if cur.ncols() == 0 {
        terminated = true;
    }
    Ok(FreeResolution { ring, differentials, ranks, degrees, minimal, tail: cur, terminated })
}

/// Minimal free resolution up to `F_length`.
pub fn resolve<F: Field>(m: &PresentedModule<F>, length: usize) -> Result<FreeResolution<F>> {
    if !m.has_local_structure() {
        return Err(Error::NotGraded);
    }
    free_resolution(m, length)
}

/// `Ω^n M`, the image of `d_n` in a minimal resolution, presented by
/// `d_{n+1}`; `Ω^0 M` is `M` with a minimal presentation.
pub fn syzygy<F: Field>(m: &PresentedModule<F>, n: usize) -> Result<PresentedModule<F>> {
    if n == 0 {
        if !m.has_local_structure() {
            return Err(Error::NotGraded);
        }
        return Ok(m.pruned());
    }
    let res = resolve(m, n)?;
    let ring = res.ring.clone();
    if res.differentials.len() < n {
        return Ok(PresentedModule::free(&ring, 0));
    }
    match res.degrees {
        Some(ds) => PresentedModule::graded_coker(&ring, res.tail, ds[n].clone()),
        None => Ok(PresentedModule::coker(&ring, res.tail)),
    }
}
