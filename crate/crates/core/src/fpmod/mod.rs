//! Finitely presented modules over a quotient ring: presentation matrices,
//! kernels of maps between free modules, pruning to minimal presentations,
//! and minimal free resolutions.

mod matrix;
mod resolution;

use std::sync::Arc;

use crate::arith::Field;
use crate::error::{Error, Result};
use crate::poly::{ModuleGb, ModuleOrder, Monomial, Poly, QuotientRing};

pub use matrix::Matrix;
pub(crate) use resolution::free_resolution;
pub use resolution::{resolve, syzygy, FreeResolution};

/// How a module sits inside a larger one, when known.
#[derive(Clone, Debug, PartialEq)]
pub enum Embedding<F: Field> {
    Plain,
    /// The generators, as ring elements, of an ideal isomorphic to the module.
    Ideal(Vec<Poly<F>>),
}

/// `coker(A)` for a matrix `A` over `R`: one generator per row, one relation
/// per column.
#[derive(Clone, Debug)]
pub struct PresentedModule<F: Field> {
    ring: Arc<QuotientRing<F>>,
    presentation: Matrix<F>,
    degrees: Option<Vec<i64>>,
    embedding: Embedding<F>,
}

/// Kernel of `A : R^m -> R^g`, as the columns of an `m x p` matrix.
pub fn syzygy_matrix<F: Field>(ring: &QuotientRing<F>, a: &Matrix<F>) -> Result<Matrix<F>> {
    let (g, m) = (a.nrows(), a.ncols());
    if m == 0 {
        return Ok(Matrix::zero(0, 0));
    }
    if g == 0 {
        return Ok(Matrix::identity(ring, m));
    }
    let base = ring.base();
    let order = ModuleOrder::PositionOverTerm;
    let gens = (0..m)
        .map(|j| {
            let mut polys = a.column(j).to_vec();
            polys.extend((0..m).map(|k| if k == j { ring.one() } else { ring.zero() }));
            base.vector_from_polys(order, &polys)
        })
        .collect();
    let gb = ModuleGb::compute(base, order, g + m, gens, ring.relations(), ring.degree_cap())?;
    let columns = gb
        .elements()
        .iter()
        .filter(|v| v.lead_component().is_some_and(|c| c >= g))
        .map(|v| base.vector_to_polys(v, g + m)[g..].iter().map(|p| ring.reduce(p)).collect::<Vec<_>>())
        .filter(|col: &Vec<Poly<F>>| col.iter().any(|p| !p.is_zero()))
        .collect();
    Ok(Matrix::from_columns(m, columns))
}

/// Gröbner basis of the column span of `a` plus the ring relations, in
/// `R^{a.nrows()}`.
pub fn column_span_gb<F: Field>(ring: &QuotientRing<F>, a: &Matrix<F>) -> Result<ModuleGb<F::Elem>> {
    let base = ring.base();
    let order = ModuleOrder::PositionOverTerm;
    let gens = (0..a.ncols()).map(|j| base.vector_from_polys(order, a.column(j))).collect();
    ModuleGb::compute(base, order, a.nrows(), gens, ring.relations(), ring.degree_cap())
}

/// Generators of `{x : map * x ∈ span(rels)}`, as columns.
pub fn preimage<F: Field>(ring: &QuotientRing<F>, map: &Matrix<F>, rels: &Matrix<F>) -> Result<Matrix<F>> {
    let n = map.ncols();
    let syz = syzygy_matrix(ring, &map.hcat(rels))?;
    let columns = (0..syz.ncols())
        .map(|j| syz.column(j)[..n].to_vec())
        .filter(|c: &Vec<Poly<F>>| c.iter().any(|p| !p.is_zero()))
        .collect();
    Ok(Matrix::from_columns(n, columns))
}

fn column_degree<F: Field>(ring: &QuotientRing<F>, col: &[Poly<F>], rows: &[i64]) -> Option<i64> {
    col.iter()
        .zip(rows)
        .find(|(p, _)| !p.is_zero())
        .and_then(|(p, d)| ring.base().homogeneous_degree(p).map(|e| e + d))
}

/// Degrees of the columns of `a` given row degrees, if `a` is homogeneous.
pub fn column_degrees<F: Field>(ring: &QuotientRing<F>, a: &Matrix<F>, rows: &[i64]) -> Option<Vec<i64>> {
    let mut out = Vec::with_capacity(a.ncols());
    for j in 0..a.ncols() {
        let col = a.column(j);
        let d = column_degree(ring, col, rows).unwrap_or(0);
        for (p, r) in col.iter().zip(rows) {
            if !p.is_zero() && ring.base().homogeneous_degree(p)? + r != d {
                return None;
            }
        }
        out.push(d);
    }
    Some(out)
}

/// Row degrees making every column of `a` homogeneous, if any exist. Each
/// connected block of rows is anchored at degree 0.
pub fn infer_degrees<F: Field>(ring: &QuotientRing<F>, a: &Matrix<F>) -> Option<Vec<i64>> {
    if !ring.is_graded() {
        return None;
    }
    let base = ring.base();
    let mut entry_deg: Vec<Vec<Option<i64>>> = Vec::with_capacity(a.ncols());
    for j in 0..a.ncols() {
        let mut col = Vec::with_capacity(a.nrows());
        for p in a.column(j) {
            if p.is_zero() {
                col.push(None);
            } else {
                col.push(Some(base.homogeneous_degree(p)?));
            }
        }
        entry_deg.push(col);
    }
    let mut deg: Vec<Option<i64>> = vec![None; a.nrows()];
    while let Some(start) = deg.iter().position(|d| d.is_none()) {
        deg[start] = Some(0);
        let mut changed = true;
        while changed {
            changed = false;
            for col in &entry_deg {
                let Some(c) = col.iter().zip(&deg).find_map(|(e, d)| Some((*e)? + (*d)?)) else {
                    continue;
                };
                for (e, d) in col.iter().zip(deg.iter_mut()) {
                    if let Some(e) = e {
                        match d {
                            Some(d) if *d != c - e => return None,
                            Some(_) => {}
                            None => {
                                *d = Some(c - e);
                                changed = true;
                            }
                        }
                    }
                }
            }
        }
    }
    deg.into_iter().collect()
}

impl<F: Field> PresentedModule<F> {
    /// `coker(a)`, with generator degrees inferred when possible.
    pub fn coker(ring: &Arc<QuotientRing<F>>, a: Matrix<F>) -> Self {
        let a = a.reduced(ring);
        let degrees = infer_degrees(ring, &a);
        PresentedModule { ring: ring.clone(), presentation: a, degrees, embedding: Embedding::Plain }
    }

    /// `coker(a)` with the given generator degrees, checked for homogeneity.
    pub fn graded_coker(ring: &Arc<QuotientRing<F>>, a: Matrix<F>, degrees: Vec<i64>) -> Result<Self> {
        let a = a.reduced(ring);
        if degrees.len() != a.nrows() || !ring.is_graded() || column_degrees(ring, &a, &degrees).is_none() {
            return Err(Error::NotGraded);
        }
        Ok(PresentedModule { ring: ring.clone(), presentation: a, degrees: Some(degrees), embedding: Embedding::Plain })
    }

    /// `R^rank`.
    pub fn free(ring: &Arc<QuotientRing<F>>, rank: usize) -> Self {
        let degrees = ring.is_graded().then(|| vec![0; rank]);
        PresentedModule {
            ring: ring.clone(),
            presentation: Matrix::zero(rank, 0),
            degrees,
            embedding: Embedding::Plain,
        }
    }

    /// `R / (gens)`.
    pub fn cyclic_quotient(ring: &Arc<QuotientRing<F>>, gens: &[Poly<F>]) -> Self {
        Self::coker(ring, Matrix::from_rows(vec![gens.to_vec()]))
    }

    pub fn ring(&self) -> &Arc<QuotientRing<F>> {
        &self.ring
    }

    pub fn presentation(&self) -> &Matrix<F> {
        &self.presentation
    }

    pub fn num_generators(&self) -> usize {
        self.presentation.nrows()
    }

    pub fn degrees(&self) -> Option<&[i64]> {
        self.degrees.as_deref()
    }

    pub fn embedding(&self) -> &Embedding<F> {
        &self.embedding
    }

    pub fn ideal_generators(&self) -> Option<&[Poly<F>]> {
        match &self.embedding {
            Embedding::Ideal(g) => Some(g),
            Embedding::Plain => None,
        }
    }

    pub fn with_embedding(mut self, embedding: Embedding<F>) -> Self {
        self.embedding = embedding;
        self
    }

    /// Minimal generators and minimal resolutions are available: a graded
    /// module over a graded ring, or any module over a local Artinian ring.
    pub fn has_local_structure(&self) -> bool {
        self.ring.is_local_artinian() || (self.ring.is_graded() && self.degrees.is_some())
    }

    pub fn relations_gb(&self) -> Result<ModuleGb<F::Elem>> {
        column_span_gb(&self.ring, &self.presentation)
    }

    pub fn is_zero(&self) -> Result<bool> {
        Ok(self.relations_gb()?.is_everything())
    }

    /// `dim_k M`, `None` when infinite.
    pub fn vector_dimension(&self) -> Result<Option<usize>> {
        Ok(self.relations_gb()?.quotient_dimension(self.ring.nvars()))
    }

    /// Standard monomials of `M` per generator, when finitely many.
    pub fn standard_basis(&self) -> Result<Option<Vec<Vec<Monomial>>>> {
        Ok(self.relations_gb()?.standard_monomials(self.ring.nvars()))
    }

    /// Eliminates generators through unit entries of the presentation; the
    /// result keeps a subset of the original generators, listed in the
    /// second component.
    pub fn prune(&self) -> (PresentedModule<F>, Vec<usize>) {
        let ring = &*self.ring;
        let mut cols: Vec<Vec<Poly<F>>> = (0..self.presentation.ncols())
            .map(|j| self.presentation.column(j).to_vec())
            .filter(|c| c.iter().any(|p| !p.is_zero()))
            .collect();
        let mut kept: Vec<usize> = (0..self.num_generators()).collect();
        while let Some((i, j, inv)) = find_unit(ring, &cols) {
            let pivot = cols.swap_remove(j);
            for col in &mut cols {
                if col[i].is_zero() {
                    continue;
                }
                let factor = ring.mul(&col[i], &inv);
                for (c, p) in col.iter_mut().zip(&pivot) {
                    if !p.is_zero() {
                        *c = ring.sub(c, &ring.mul(&factor, p));
                    }
                }
                debug_assert!(col[i].is_zero());
            }
            for col in &mut cols {
                col.remove(i);
            }
            kept.remove(i);
            cols.retain(|c| c.iter().any(|p| !p.is_zero()));
        }
        cols.sort_by_key(|c| c.iter().position(|p| !p.is_zero()));
        let degrees = self.degrees.as_ref().map(|d| kept.iter().map(|&i| d[i]).collect());
        let embedding = match &self.embedding {
            Embedding::Ideal(g) => Embedding::Ideal(kept.iter().map(|&i| g[i].clone()).collect()),
            Embedding::Plain => Embedding::Plain,
        };
        let module = PresentedModule {
            ring: self.ring.clone(),
            presentation: Matrix::from_columns(kept.len(), cols),
            degrees,
            embedding,
        };
        (module, kept)
    }

    pub fn pruned(&self) -> PresentedModule<F> {
        self.prune().0
    }

    /// `dim_k M / mM`.
    pub fn minimal_generators(&self) -> Result<usize> {
        if !self.has_local_structure() {
            return Err(Error::NotGraded);
        }
        Ok(self.pruned().num_generators())
    }

    /// Free iff the minimal presentation has no relations.
    pub fn is_free(&self) -> Result<bool> {
        if !self.has_local_structure() {
            return Err(Error::NotGraded);
        }
        Ok(self.pruned().presentation.ncols() == 0)
    }

    /// `M ⊕ N`.
    pub fn direct_sum(&self, other: &PresentedModule<F>) -> Result<PresentedModule<F>> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        let presentation = self.presentation.block_diagonal(&other.presentation);
        let degrees = match (&self.degrees, &other.degrees) {
            (Some(a), Some(b)) => Some(a.iter().chain(b).copied().collect()),
            _ => None,
        };
        Ok(PresentedModule { ring: self.ring.clone(), presentation, degrees, embedding: Embedding::Plain })
    }

    /// Presentation matrix with entries rendered, row by row.
    pub fn render(&self) -> Vec<Vec<String>> {
        self.presentation.render(&self.ring)
    }
}

fn find_unit<F: Field>(ring: &QuotientRing<F>, cols: &[Vec<Poly<F>>]) -> Option<(usize, usize, Poly<F>)> {
    let base = ring.base();
    let constant = cols.iter().enumerate().find_map(|(j, c)| {
        c.iter().position(|p| !p.is_zero() && base.is_constant(p)).map(|i| (i, j))
    });
    let (i, j) = constant.or_else(|| {
        if !ring.is_local_artinian() {
            return None;
        }
        cols.iter().enumerate().find_map(|(j, c)| c.iter().position(|p| ring.is_unit(p)).map(|i| (i, j)))
    })?;
    let inv = ring.unit_inverse(&cols[j][i])?;
    Some((i, j, inv))
}

/// `I ⊆ R` as the module `coker(syz(g_1, ..., g_s))`, remembering the
/// generators.
pub fn present_ideal<F: Field>(ring: &Arc<QuotientRing<F>>, gens: &[Poly<F>]) -> Result<PresentedModule<F>> {
    let gens: Vec<Poly<F>> = gens.iter().map(|g| ring.reduce(g)).filter(|g| !g.is_zero()).collect();
    let row = Matrix::from_rows(vec![gens.clone()]);
    let syz = syzygy_matrix(ring, &row)?;
    let base = ring.base();
    let degrees = if ring.is_graded() {
        gens.iter()
            .map(|g| base.homogeneous_degree(g))
            .collect::<Option<Vec<i64>>>()
            .filter(|d| column_degrees(ring, &syz, d).is_some())
    } else {
        None
    };
    Ok(PresentedModule { ring: ring.clone(), presentation: syz, degrees, embedding: Embedding::Ideal(gens) })
}

/// A submodule of a presented module, given by generators as vectors in
/// the ambient free module.
#[derive(Clone, Debug)]
pub struct Submodule<F: Field> {
    ambient: PresentedModule<F>,
    gens: Vec<Vec<Poly<F>>>,
}

impl<F: Field> Submodule<F> {
    pub fn new(ambient: &PresentedModule<F>, gens: Vec<Vec<Poly<F>>>) -> Result<Self> {
        let rank = ambient.num_generators();
        if gens.iter().any(|g| g.len() != rank) {
            return Err(Error::InvalidInput(format!("submodule generators must have {rank} entries")));
        }
        let ring = ambient.ring();
        let gens = gens.into_iter().map(|g| g.iter().map(|p| ring.reduce(p)).collect()).collect();
        Ok(Submodule { ambient: ambient.clone(), gens })
    }

    /// An ideal of `R` as a submodule of `R`.
    pub fn ideal(ring: &Arc<QuotientRing<F>>, gens: &[Poly<F>]) -> Self {
        let ambient = PresentedModule::free(ring, 1);
        let gens = gens.iter().map(|g| vec![ring.reduce(g)]).collect();
        Submodule { ambient, gens }
    }

    /// All of `X`.
    pub fn whole(ambient: &PresentedModule<F>) -> Self {
        let g = ambient.num_generators();
        let ring = ambient.ring();
        let gens = (0..g)
            .map(|i| (0..g).map(|k| if k == i { ring.one() } else { ring.zero() }).collect())
            .collect();
        Submodule { ambient: ambient.clone(), gens }
    }

    pub fn ambient(&self) -> &PresentedModule<F> {
        &self.ambient
    }

    pub fn generators(&self) -> &[Vec<Poly<F>>] {
        &self.gens
    }

    pub fn ring(&self) -> &Arc<QuotientRing<F>> {
        self.ambient.ring()
    }

    fn generator_matrix(&self) -> Matrix<F> {
        Matrix::from_columns(self.ambient.num_generators(), self.gens.clone())
    }

    /// Gröbner basis of the preimage of the submodule in the ambient free
    /// module.
    pub fn basis(&self) -> Result<ModuleGb<F::Elem>> {
        let m = self.generator_matrix().hcat(self.ambient.presentation());
        column_span_gb(self.ring(), &m)
    }

    pub fn contains_vector(&self, v: &[Poly<F>]) -> Result<bool> {
        let base = self.ring().base();
        let gb = self.basis()?;
        Ok(gb.contains(base, &base.vector_from_polys(gb.module_order(), v)))
    }

    pub fn contains(&self, other: &Submodule<F>) -> Result<bool> {
        self.same_ambient(other)?;
        let base = self.ring().base();
        let gb = self.basis()?;
        Ok(other.gens.iter().all(|v| gb.contains(base, &base.vector_from_polys(gb.module_order(), v))))
    }

    pub fn equals(&self, other: &Submodule<F>) -> Result<bool> {
        self.same_ambient(other)?;
        Ok(self.basis()? == other.basis()?)
    }

    fn same_ambient(&self, other: &Submodule<F>) -> Result<()> {
        if self.ring() != other.ring() || self.ambient.presentation() != other.ambient.presentation() {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    /// True iff the submodule is all of the ambient module.
    pub fn is_everything(&self) -> Result<bool> {
        Ok(self.basis()?.is_everything())
    }

    pub fn is_zero(&self) -> Result<bool> {
        let base = self.ring().base();
        let gb = self.ambient.relations_gb()?;
        Ok(self.gens.iter().all(|v| gb.contains(base, &base.vector_from_polys(gb.module_order(), v))))
    }

    /// `dim_k` of the submodule, `None` if infinite.
    pub fn vector_dimension(&self) -> Result<Option<usize>> {
        let nvars = self.ring().nvars();
        let whole = self.ambient.relations_gb()?.quotient_dimension(nvars);
        let rest = self.basis()?.quotient_dimension(nvars);
        Ok(match (whole, rest) {
            (Some(w), Some(r)) => Some(w - r),
            _ => None,
        })
    }

    /// The submodule as a module in its own right, generated by the given
    /// vectors.
    pub fn present(&self) -> Result<PresentedModule<F>> {
        let ring = self.ring();
        let u = self.generator_matrix();
        let syz = preimage(ring, &u, self.ambient.presentation())?;
        let mut module = PresentedModule::coker(ring, syz);
        if module.degrees.is_none() && self.gens.is_empty() {
            module.degrees = Some(Vec::new());
        }
        if self.ambient.num_generators() == 1 && self.ambient.presentation().ncols() == 0 {
            module.embedding = Embedding::Ideal(self.gens.iter().map(|v| v[0].clone()).collect());
        }
        Ok(module)
    }

    /// `X / M`.
    pub fn quotient(&self) -> PresentedModule<F> {
        let m = self.ambient.presentation().hcat(&self.generator_matrix());
        PresentedModule::coker(self.ring(), m)
    }

    /// The ideal of `R` when the ambient module is `R` itself.
    pub fn as_ideal(&self) -> Result<crate::poly::Ideal<F>> {
        if self.ambient.num_generators() != 1 || self.ambient.presentation().ncols() != 0 {
            return Err(Error::NotAnIdeal);
        }
        let gens: Vec<Poly<F>> = self.gens.iter().map(|v| v[0].clone()).collect();
        crate::poly::Ideal::new(self.ring(), &gens)
    }
}

#[cfg(test)]
mod tests;
