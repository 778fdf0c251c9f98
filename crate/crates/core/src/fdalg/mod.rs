//! Artinian quotient rings as finite-dimensional algebras and their modules
//! as explicit representations. Hom, Ext^1, syzygies, cosyzygies, socles
//! and traces are computed by null spaces, independently of the Gröbner
//! path.

mod enumerate;
mod linalg;

use std::collections::HashMap;
use std::sync::Arc;

use crate::arith::Field;
use crate::error::{Error, Result};
use crate::fpmod::PresentedModule;
use crate::poly::{Monomial, Poly, QuotientRing};

pub use enumerate::{enumerate_ideals, FdIdeal, IdealSource};
pub use linalg::{dot, nullspace, rref, Mat, Subspace};

pub const DEFAULT_DIMENSION_CAP: usize = 64;

/// `R = k[x]/J` with `dim_k R < ∞`, as structure constants on the standard
/// monomials.
#[derive(Clone, Debug)]
pub struct FiniteAlgebra<F: Field> {
    ring: Arc<QuotientRing<F>>,
    basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    structure: Vec<Vec<Vec<F::Elem>>>,
    actions: Vec<Mat<F::Elem>>,
    unit: usize,
}

/// Checks structure constants on all triples up to this dimension.
const AXIOM_CHECK_LIMIT: usize = 16;

/// Builds the algebra of an Artinian quotient, refusing dimensions above
/// `cap`.
pub fn algebraize<F: Field>(ring: &Arc<QuotientRing<F>>, cap: usize) -> Result<FiniteAlgebra<F>> {
    let mut basis = ring.standard_monomials().ok_or(Error::NotArtinian)?.to_vec();
    if basis.len() > cap {
        return Err(Error::DimensionCapExceeded(cap));
    }
    let base = ring.base();
    basis.sort_by(|a, b| base.cmp_monomials(a, b));
    let index: HashMap<Monomial, usize> = basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    let k = ring.field();
    let d = basis.len();
    let coords = |p: &Poly<F>| {
        let mut v = vec![k.zero(); d];
        for (m, c) in p.terms() {
            v[index[m]] = c.clone();
        }
        v
    };
    let structure: Vec<Vec<Vec<F::Elem>>> = basis
        .iter()
        .map(|a| {
            basis
                .iter()
                .map(|b| coords(&ring.reduce(&base.term(a.mul(b), k.one()))))
                .collect()
        })
        .collect();
    let unit = index[&Monomial::one(ring.nvars())];
    let actions = (0..ring.nvars())
        .map(|i| {
            let cols: Vec<Vec<F::Elem>> =
                basis.iter().map(|b| coords(&ring.reduce(&base.mul(&ring.var(i), &base.term(b.clone(), k.one()))))).collect();
            Mat::from_columns(k, d, &cols)
        })
        .collect();
    let algebra = FiniteAlgebra { ring: ring.clone(), basis, index, structure, actions, unit };
    if !algebra.axioms_hold() {
        return Err(Error::InvalidInput("structure constants violate the algebra axioms".into()));
    }
    Ok(algebra)
}

impl<F: Field> FiniteAlgebra<F> {
    pub fn ring(&self) -> &Arc<QuotientRing<F>> {
        &self.ring
    }

    pub fn field(&self) -> &F {
        self.ring.field()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Standard monomials, ascending in the monomial order.
    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn unit_index(&self) -> usize {
        self.unit
    }

    /// Coordinates of `b_i * b_j`.
    pub fn product(&self, i: usize, j: usize) -> &[F::Elem] {
        &self.structure[i][j]
    }

    /// Multiplication by the variables.
    pub fn variable_actions(&self) -> &[Mat<F::Elem>] {
        &self.actions
    }

    pub fn coords(&self, p: &Poly<F>) -> Vec<F::Elem> {
        let k = self.field();
        let mut v = vec![k.zero(); self.dim()];
        for (m, c) in self.ring.reduce(p).terms() {
            v[self.index[m]] = c.clone();
        }
        v
    }

    pub fn poly(&self, v: &[F::Elem]) -> Poly<F> {
        let k = self.field();
        let terms =
            self.basis.iter().zip(v).filter(|(_, c)| !k.is_zero(c)).map(|(m, c)| (m.clone(), c.clone())).collect();
        self.ring.base().from_terms(terms)
    }

    pub fn mul(&self, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        let k = self.field();
        let mut out = vec![k.zero(); self.dim()];
        for (i, x) in a.iter().enumerate() {
            if k.is_zero(x) {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if k.is_zero(y) {
                    continue;
                }
                let c = k.mul(x, y);
                for (o, s) in out.iter_mut().zip(&self.structure[i][j]) {
                    if !k.is_zero(s) {
                        *o = k.add(o, &k.mul(&c, s));
                    }
                }
            }
        }
        out
    }

    fn unit_vector(&self, i: usize) -> Vec<F::Elem> {
        let k = self.field();
        let mut v = vec![k.zero(); self.dim()];
        v[i] = k.one();
        v
    }

    fn axioms_hold(&self) -> bool {
        let d = self.dim();
        let e = self.unit_vector(self.unit);
        for i in 0..d {
            let b = self.unit_vector(i);
            if self.mul(&e, &b) != b {
                return false;
            }
        }
        if d > AXIOM_CHECK_LIMIT {
            return true;
        }
        for i in 0..d {
            for j in 0..d {
                if self.structure[i][j] != self.structure[j][i] {
                    return false;
                }
                let ij = &self.structure[i][j];
                for l in 0..d {
                    let left = self.mul(ij, &self.unit_vector(l));
                    let right = self.mul(&self.unit_vector(i), &self.structure[j][l]);
                    if left != right {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The ideal generated by the given elements, as a subspace of `R`.
    pub fn ideal_span(&self, gens: &[Vec<F::Elem>]) -> Subspace<F::Elem> {
        let vectors = gens
            .iter()
            .flat_map(|g| (0..self.dim()).map(move |b| self.mul(&self.unit_vector(b), g)))
            .collect();
        Subspace::span(self.field(), self.dim(), vectors)
    }

    pub fn ideal_from_polys(&self, gens: &[Poly<F>]) -> Subspace<F::Elem> {
        let gens: Vec<_> = gens.iter().map(|g| self.coords(g)).collect();
        self.ideal_span(&gens)
    }

    /// The maximal ideal spanned by the non-unit standard monomials.
    pub fn maximal_ideal(&self) -> Subspace<F::Elem> {
        let vs = (0..self.dim()).filter(|&i| i != self.unit).map(|i| self.unit_vector(i)).collect();
        Subspace::span(self.field(), self.dim(), vs)
    }

    /// Multiplication by the basis monomial `b` on a module.
    fn monomial_action(&self, module: &FDModule<F>, b: usize) -> Mat<F::Elem> {
        let k = self.field();
        let mut m = Mat::identity(k, module.dim);
        for (i, e) in self.basis[b].exponents().enumerate() {
            for _ in 0..e {
                m = module.actions[i].mul(k, &m);
            }
        }
        m
    }
}

/// A finite-dimensional module given by the action of each variable.
#[derive(Clone, Debug, PartialEq)]
pub struct FDModule<F: Field> {
    dim: usize,
    actions: Vec<Mat<F::Elem>>,
}

impl<F: Field> FDModule<F> {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn actions(&self) -> &[Mat<F::Elem>] {
        &self.actions
    }

    /// `R` acting on itself.
    pub fn regular(a: &FiniteAlgebra<F>) -> Self {
        FDModule { dim: a.dim(), actions: a.actions.clone() }
    }

    /// `R^n`, coordinates grouped by summand.
    pub fn free(a: &FiniteAlgebra<F>, n: usize) -> Self {
        let k = a.field();
        let d = a.dim();
        let actions = a
            .actions
            .iter()
            .map(|m| {
                let mut big = Mat::zeros(k, n * d, n * d);
                for s in 0..n {
                    for i in 0..d {
                        for j in 0..d {
                            big.set(s * d + i, s * d + j, m.get(i, j).clone());
                        }
                    }
                }
                big
            })
            .collect();
        FDModule { dim: n * d, actions }
    }

    /// `k = R/m`.
    pub fn residue_field(a: &FiniteAlgebra<F>) -> Self {
        let k = a.field();
        FDModule { dim: 1, actions: a.actions.iter().map(|_| Mat::zeros(k, 1, 1)).collect() }
    }

    /// A submodule given as a subspace stable under the action.
    pub fn submodule(&self, field: &F, w: &Subspace<F::Elem>) -> Self {
        let actions = self
            .actions
            .iter()
            .map(|m| {
                let cols: Vec<Vec<F::Elem>> = w.basis().iter().map(|b| w.coordinates(&m.apply(field, b))).collect();
                Mat::from_columns(field, w.dim(), &cols)
            })
            .collect();
        FDModule { dim: w.dim(), actions }
    }

    /// The quotient by a stable subspace.
    pub fn quotient(&self, field: &F, w: &Subspace<F::Elem>) -> Self {
        let keep = w.complement_indices();
        let actions = self
            .actions
            .iter()
            .map(|m| {
                let cols: Vec<Vec<F::Elem>> = keep
                    .iter()
                    .map(|&c| {
                        let r = w.reduce(field, &m.column(c));
                        keep.iter().map(|&i| r[i].clone()).collect()
                    })
                    .collect();
                Mat::from_columns(field, keep.len(), &cols)
            })
            .collect();
        FDModule { dim: keep.len(), actions }
    }

    /// `m M`.
    pub fn radical(&self, field: &F) -> Subspace<F::Elem> {
        let vs = self.actions.iter().flat_map(|m| m.columns()).collect();
        Subspace::span(field, self.dim, vs)
    }

    /// `dim_k M / mM`.
    pub fn minimal_generators(&self, field: &F) -> usize {
        self.dim - self.radical(field).dim()
    }

    /// `(0 :_M m)`.
    pub fn socle(&self, field: &F) -> Subspace<F::Elem> {
        let rows: Vec<Vec<F::Elem>> =
            self.actions.iter().flat_map(|m| (0..m.nrows()).map(|i| m.row(i).to_vec()).collect::<Vec<_>>()).collect();
        Subspace::span(field, self.dim, nullspace(field, rows, self.dim))
    }
}

/// `coker(A)` as a representation, with the projection from `R^g`.
#[derive(Clone, Debug)]
pub struct PresentedFd<F: Field> {
    pub module: FDModule<F>,
    relations: Subspace<F::Elem>,
    keep: Vec<usize>,
}

impl<F: Field> PresentedFd<F> {
    pub fn new(a: &FiniteAlgebra<F>, m: &PresentedModule<F>) -> Self {
        let k = a.field();
        let g = m.num_generators();
        let d = a.dim();
        let free = FDModule::free(a, g);
        let mut vectors = Vec::new();
        for col in m.presentation().columns() {
            let v = flatten(a, col);
            for b in 0..d {
                vectors.push(a.monomial_action(&free, b).apply(k, &v));
            }
        }
        let relations = Subspace::span(k, g * d, vectors);
        let module = free.quotient(k, &relations);
        let keep = relations.complement_indices();
        PresentedFd { module, relations, keep }
    }

    /// Image of a vector of `R^g` in the quotient coordinates.
    pub fn project(&self, a: &FiniteAlgebra<F>, v: &[Poly<F>]) -> Vec<F::Elem> {
        let r = self.relations.reduce(a.field(), &flatten(a, v));
        self.keep.iter().map(|&i| r[i].clone()).collect()
    }

    /// The submodule generated by the given vectors of `R^g`.
    pub fn submodule_span(&self, a: &FiniteAlgebra<F>, gens: &[Vec<Poly<F>>]) -> Subspace<F::Elem> {
        let k = a.field();
        let vectors = gens
            .iter()
            .flat_map(|g| {
                let v = self.project(a, g);
                (0..a.dim()).map(move |b| a.monomial_action(&self.module, b).apply(k, &v))
            })
            .collect();
        Subspace::span(k, self.module.dim, vectors)
    }
}

fn flatten<F: Field>(a: &FiniteAlgebra<F>, v: &[Poly<F>]) -> Vec<F::Elem> {
    v.iter().flat_map(|p| a.coords(p)).collect()
}

/// Converts `coker(A)` into a representation, coordinates of `R^g` grouped
/// by generator.
pub fn module_from_presentation<F: Field>(a: &FiniteAlgebra<F>, m: &PresentedModule<F>) -> FDModule<F> {
    PresentedFd::new(a, m).module
}

/// `R/I` for an ideal given as a subspace.
pub fn quotient_algebra_module<F: Field>(a: &FiniteAlgebra<F>, i: &Subspace<F::Elem>) -> FDModule<F> {
    FDModule::regular(a).quotient(a.field(), i)
}

/// An ideal as a module.
pub fn ideal_module<F: Field>(a: &FiniteAlgebra<F>, i: &Subspace<F::Elem>) -> FDModule<F> {
    FDModule::regular(a).submodule(a.field(), i)
}

/// Basis of `Hom_R(M, N)`, each map a `dim N x dim M` matrix.
pub fn fd_hom<F: Field>(field: &F, m: &FDModule<F>, n: &FDModule<F>) -> Vec<Mat<F::Elem>> {
    let (dm, dn) = (m.dim, n.dim);
    let unknowns = dm * dn;
    let mut rows = Vec::new();
    for (am, an) in m.actions.iter().zip(&n.actions) {
        for p in 0..dn {
            for q in 0..dm {
                // (f A_M - A_N f)[p][q] = 0
                let mut row = vec![field.zero(); unknowns];
                for r in 0..dm {
                    let c = am.get(r, q);
                    if !field.is_zero(c) {
                        row[p * dm + r] = field.add(&row[p * dm + r], c);
                    }
                }
                for s in 0..dn {
                    let c = an.get(p, s);
                    if !field.is_zero(c) {
                        row[s * dm + q] = field.sub(&row[s * dm + q], c);
                    }
                }
                if row.iter().any(|e| !field.is_zero(e)) {
                    rows.push(row);
                }
            }
        }
    }
    nullspace(field, rows, unknowns)
        .into_iter()
        .map(|x| {
            let mut f = Mat::zeros(field, dn, dm);
            for p in 0..dn {
                for q in 0..dm {
                    f.set(p, q, x[p * dm + q].clone());
                }
            }
            f
        })
        .collect()
}

/// Minimal generators of `M` as vectors: unit vectors spanning a complement
/// of `mM`.
fn generator_vectors<F: Field>(field: &F, m: &FDModule<F>) -> Vec<Vec<F::Elem>> {
    m.radical(field)
        .complement_indices()
        .into_iter()
        .map(|c| {
            let mut v = vec![field.zero(); m.dim];
            v[c] = field.one();
            v
        })
        .collect()
}

/// `Ω^1 M`, the kernel of a minimal free cover, and the rank of the cover.
pub fn fd_syzygy<F: Field>(a: &FiniteAlgebra<F>, m: &FDModule<F>) -> (FDModule<F>, usize) {
    let k = a.field();
    let gens = generator_vectors(k, m);
    let mu = gens.len();
    let d = a.dim();
    let mut cols = Vec::with_capacity(mu * d);
    for g in &gens {
        for b in 0..d {
            cols.push(a.monomial_action(m, b).apply(k, g));
        }
    }
    let cover = Mat::from_columns(k, m.dim, &cols);
    let rows = (0..cover.nrows()).map(|i| cover.row(i).to_vec()).collect();
    let kernel = Subspace::span(k, mu * d, nullspace(k, rows, mu * d));
    (FDModule::free(a, mu).submodule(k, &kernel), mu)
}

/// `Ω^n M`.
pub fn fd_syzygy_n<F: Field>(a: &FiniteAlgebra<F>, m: &FDModule<F>, n: usize) -> FDModule<F> {
    let mut cur = m.clone();
    for _ in 0..n {
        cur = fd_syzygy(a, &cur).0;
    }
    cur
}

/// `dim_k Ext^1(M, N)` from `0 -> Ω M -> R^μ -> M -> 0`.
pub fn fd_ext1<F: Field>(a: &FiniteAlgebra<F>, m: &FDModule<F>, n: &FDModule<F>) -> usize {
    let k = a.field();
    let (omega, mu) = fd_syzygy(a, m);
    fd_hom(k, &omega, n).len() + fd_hom(k, m, n).len() - mu * n.dim
}

/// `Ω^{-1} M = coker(M -> R^s)`, the map built from minimal generators of
/// `Hom(M, R)`.
pub fn fd_cosyzygy<F: Field>(a: &FiniteAlgebra<F>, m: &FDModule<F>) -> FDModule<F> {
    let k = a.field();
    let r = FDModule::regular(a);
    let maps = fd_hom(k, m, &r);
    let flat = |f: &Mat<F::Elem>| f.flatten().to_vec();
    let size = a.dim() * m.dim;
    let radical = Subspace::span(
        k,
        size,
        maps.iter().flat_map(|f| a.actions.iter().map(move |x| flat(&x.mul(k, f)))).collect(),
    );
    let mut span = radical;
    let mut chosen = Vec::new();
    for f in &maps {
        if !span.contains(k, &flat(f)) {
            span = span.sum(k, &Subspace::span(k, size, vec![flat(f)]));
            chosen.push(f);
        }
    }
    let s = chosen.len();
    let d = a.dim();
    let image: Vec<Vec<F::Elem>> = (0..m.dim)
        .map(|q| chosen.iter().flat_map(|f| f.column(q)).collect())
        .collect();
    let free = FDModule::free(a, s);
    free.quotient(k, &Subspace::span(k, s * d, image))
}

/// `Ω^{-n} M`.
pub fn fd_cosyzygy_n<F: Field>(a: &FiniteAlgebra<F>, m: &FDModule<F>, n: usize) -> FDModule<F> {
    let mut cur = m.clone();
    for _ in 0..n {
        cur = fd_cosyzygy(a, &cur);
    }
    cur
}

/// `T_X(M)` as a subspace of `X`.
pub fn fd_trace<F: Field>(field: &F, m: &FDModule<F>, x: &FDModule<F>) -> Subspace<F::Elem> {
    let vs = fd_hom(field, m, x).iter().flat_map(|f| f.columns()).collect();
    Subspace::span(field, x.dim, vs)
}

/// Minimal generators of an ideal as ring elements.
pub fn ideal_generators<F: Field>(a: &FiniteAlgebra<F>, i: &Subspace<F::Elem>) -> Vec<Poly<F>> {
    let k = a.field();
    let module = ideal_module(a, i);
    generator_vectors(k, &module)
        .iter()
        .map(|v| {
            let mut x = vec![k.zero(); a.dim()];
            for (c, b) in v.iter().zip(i.basis()) {
                if !k.is_zero(c) {
                    for (o, e) in x.iter_mut().zip(b) {
                        *o = k.add(o, &k.mul(c, e));
                    }
                }
            }
            a.poly(&x)
        })
        .collect()
}

#[cfg(test)]
mod tests;
