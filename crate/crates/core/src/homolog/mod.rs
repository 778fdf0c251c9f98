//! Hom and Ext modules, duals, annihilators, socles, grade, trace modules
//! and trace ideals, cosyzygies over Artinian Gorenstein rings, and
//! rigidity verdicts.

use std::sync::Arc;

use crate::arith::Field;
use crate::error::{Error, Result};
use crate::fpmod::{free_resolution, preimage, present_ideal, syzygy, FreeResolution, Matrix, PresentedModule, Submodule};
use crate::poly::{Ideal, Poly, QuotientRing};

/// `Hom_R(M, N)` with one explicit map per generator. A map is an
/// `h x g` matrix sending the `g` generators of `M` to vectors over the `h`
/// generators of `N`.
#[derive(Clone, Debug)]
pub struct HomModule<F: Field> {
    pub carrier: PresentedModule<F>,
    pub lifts: Vec<Matrix<F>>,
}

impl<F: Field> HomModule<F> {
    pub fn is_zero(&self) -> Result<bool> {
        self.carrier.is_zero()
    }

    pub fn vector_dimension(&self) -> Result<Option<usize>> {
        self.carrier.vector_dimension()
    }

    /// Every lift composed with the presentation of `M` lands in the
    /// relations of `N`.
    pub fn lifts_well_defined(&self, m: &PresentedModule<F>, n: &PresentedModule<F>) -> Result<bool> {
        let ring = m.ring();
        let rels = n.relations_gb()?;
        let base = ring.base();
        for phi in &self.lifts {
            let img = phi.mul(ring, m.presentation());
            for col in img.columns() {
                if !rels.contains(base, &base.vector_from_polys(rels.module_order(), col)) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// `ker(d_{i+1}^*) / im(d_i^*)` inside `Hom(F_i, N) = N^{r_i}`, with
/// generators returned as flattened vectors: entry `j * h + a` is the
/// coordinate of `F_i`'s `j`-th basis vector on `N`'s `a`-th generator.
fn cohomology<F: Field>(
    ring: &Arc<QuotientRing<F>>,
    rank: usize,
    incoming: Option<&Matrix<F>>,
    outgoing: &Matrix<F>,
    n: &PresentedModule<F>,
) -> Result<(PresentedModule<F>, Vec<Vec<Poly<F>>>)> {
    let h = n.num_generators();
    let b = n.presentation();
    if rank == 0 || h == 0 {
        return Ok((PresentedModule::free(ring, 0), Vec::new()));
    }
    let next = outgoing.ncols();
    let mut cols: Vec<Vec<Poly<F>>> = vec![vec![ring.zero(); h * next]; h * rank];
    for j in 0..rank {
        for k in 0..next {
            let e = outgoing.entry(j, k);
            if e.is_zero() {
                continue;
            }
            for a in 0..h {
                cols[j * h + a][k * h + a] = e.clone();
            }
        }
    }
    let dual_out = Matrix::from_columns(h * next, cols);
    let kernel = preimage(ring, &dual_out, &b.repeat_diagonal(next))?;

    let mut boundary: Vec<Vec<Poly<F>>> = Vec::new();
    if let Some(d) = incoming {
        for jp in 0..d.nrows() {
            for a in 0..h {
                let mut v = vec![ring.zero(); h * rank];
                for k in 0..rank {
                    v[k * h + a] = d.entry(jp, k).clone();
                }
                if v.iter().any(|p| !p.is_zero()) {
                    boundary.push(v);
                }
            }
        }
    }
    let rels = Matrix::from_columns(h * rank, boundary).hcat(&b.repeat_diagonal(rank));
    let pres = preimage(ring, &kernel, &rels)?;
    let (carrier, kept) = PresentedModule::coker(ring, pres).prune();
    let gens = kept.iter().map(|&j| kernel.column(j).to_vec()).collect();
    Ok((carrier, gens))
}

fn same_ring<F: Field>(m: &PresentedModule<F>, n: &PresentedModule<F>) -> Result<()> {
    if m.ring() != n.ring() {
        return Err(Error::RingMismatch);
    }
    Ok(())
}

/// `Hom_R(M, N)`.
pub fn hom_module<F: Field>(m: &PresentedModule<F>, n: &PresentedModule<F>) -> Result<HomModule<F>> {
    same_ring(m, n)?;
    let ring = m.ring();
    let (g, h) = (m.num_generators(), n.num_generators());
    let (carrier, gens) = cohomology(ring, g, None, m.presentation(), n)?;
    let lifts = gens
        .into_iter()
        .map(|v| {
            let columns = (0..g).map(|j| v[j * h..(j + 1) * h].to_vec()).collect();
            Matrix::from_columns(h, columns)
        })
        .collect();
    Ok(HomModule { carrier, lifts })
}

/// `M* = Hom_R(M, R)`.
pub fn dual<F: Field>(m: &PresentedModule<F>) -> Result<HomModule<F>> {
    hom_module(m, &PresentedModule::free(m.ring(), 1))
}

fn ext_from_resolution<F: Field>(
    res: &FreeResolution<F>,
    i: usize,
    n: &PresentedModule<F>,
) -> Result<PresentedModule<F>> {
    let incoming = (i >= 1).then(|| res.differential(i));
    let outgoing = res.differential(i + 1);
    Ok(cohomology(res.ring(), res.rank(i), incoming.as_ref(), &outgoing, n)?.0)
}

/// `Ext^i_R(M, N)` as a subquotient of `Hom(F_i, N)`.
pub fn ext<F: Field>(i: usize, m: &PresentedModule<F>, n: &PresentedModule<F>) -> Result<PresentedModule<F>> {
    same_ring(m, n)?;
    let res = free_resolution(m, i + 1)?;
    ext_from_resolution(&res, i, n)
}

/// `Ext^i_R(M, N)` for `i = 0..=top` from one resolution.
pub fn ext_range<F: Field>(top: usize, m: &PresentedModule<F>, n: &PresentedModule<F>) -> Result<Vec<PresentedModule<F>>> {
    same_ring(m, n)?;
    let res = free_resolution(m, top + 1)?;
    (0..=top).map(|i| ext_from_resolution(&res, i, n)).collect()
}

/// `T_X(M)` with the maps whose images generate it.
#[derive(Clone, Debug)]
pub struct TraceResult<F: Field> {
    pub trace: Submodule<F>,
    pub certifying_maps: Vec<Matrix<F>>,
    pub proper: bool,
}

impl<F: Field> TraceResult<F> {
    /// The trace as an ideal, when `X = R`.
    pub fn ideal(&self) -> Result<Ideal<F>> {
        self.trace.as_ideal()
    }
}

fn images<F: Field>(maps: &[Matrix<F>]) -> Vec<Vec<Poly<F>>> {
    maps.iter()
        .flat_map(|phi| phi.columns().iter().cloned())
        .filter(|c| c.iter().any(|p| !p.is_zero()))
        .collect()
}

/// The sum of the images of all maps `M -> X`.
pub fn trace_in<F: Field>(m: &PresentedModule<F>, x: &PresentedModule<F>) -> Result<TraceResult<F>> {
    let hom = hom_module(m, x)?;
    let trace = Submodule::new(x, images(&hom.lifts))?;
    let proper = !trace.is_everything()?;
    Ok(TraceResult { trace, certifying_maps: hom.lifts, proper })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TraceMethod {
    /// Images of the generators of `Hom(I, R)`.
    HomImages,
    /// Entries of the left kernel of the presentation matrix.
    LeftKernel,
}

/// `T_R(I)` for an ideal presented with its generators.
pub fn trace_ideal<F: Field>(i: &PresentedModule<F>, method: TraceMethod) -> Result<TraceResult<F>> {
    let gens = i.ideal_generators().ok_or(Error::NotAnIdeal)?;
    let ring = i.ring();
    match method {
        TraceMethod::HomImages => trace_in(i, &PresentedModule::free(ring, 1)),
        TraceMethod::LeftKernel => {
            let a = i.presentation();
            let kernel = crate::fpmod::syzygy_matrix(ring, &a.transpose())?;
            let kernel = if a.ncols() == 0 { Matrix::identity(ring, gens.len()) } else { kernel };
            let maps: Vec<Matrix<F>> =
                kernel.columns().iter().map(|c| Matrix::from_rows(vec![c.clone()])).collect();
            let entries: Vec<Poly<F>> =
                kernel.columns().iter().flatten().filter(|p| !p.is_zero()).cloned().collect();
            let trace = Submodule::ideal(ring, &entries);
            let proper = !trace.is_everything()?;
            Ok(TraceResult { trace, certifying_maps: maps, proper })
        }
    }
}

/// Both readings of "M is a trace module in X" for `M ⊆ X`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TraceModuleTest {
    /// `T_X(M) = M`.
    pub equals_own_trace: bool,
    /// Every map `M -> X` has image inside `M`.
    pub maps_stay_inside: bool,
}

impl TraceModuleTest {
    pub fn consistent(&self) -> bool {
        self.equals_own_trace == self.maps_stay_inside
    }
}

pub fn trace_module_test<F: Field>(m: &Submodule<F>) -> Result<TraceModuleTest> {
    let x = m.ambient();
    let presented = m.present()?;
    let result = trace_in(&presented, x)?;
    let equals_own_trace = result.trace.equals(m)?;
    let mut maps_stay_inside = true;
    for v in images(&result.certifying_maps) {
        if !m.contains_vector(&v)? {
            maps_stay_inside = false;
            break;
        }
    }
    Ok(TraceModuleTest { equals_own_trace, maps_stay_inside })
}

/// True iff `M = T_X(M)`; errors if the two equivalent tests disagree.
pub fn is_trace_module<F: Field>(m: &Submodule<F>) -> Result<bool> {
    let t = trace_module_test(m)?;
    if !t.consistent() {
        return Err(Error::InvalidInput("trace tests disagree".into()));
    }
    Ok(t.equals_own_trace)
}

/// `(0 :_R M)`.
pub fn annihilator<F: Field>(m: &PresentedModule<F>) -> Result<Ideal<F>> {
    let m = m.pruned();
    let ring = m.ring();
    let g = m.num_generators();
    if g == 0 {
        return Ideal::new(ring, &[ring.one()]);
    }
    let mut diag = vec![ring.zero(); g * g];
    for i in 0..g {
        diag[i * g + i] = ring.one();
    }
    let u = Matrix::from_columns(g * g, vec![diag]);
    let pre = preimage(ring, &u, &m.presentation().repeat_diagonal(g))?;
    let gens: Vec<Poly<F>> = pre.columns().iter().map(|c| c[0].clone()).collect();
    Ideal::new(ring, &gens)
}

/// `(0 :_M m)` for the maximal ideal generated by the variables.
pub fn socle<F: Field>(m: &PresentedModule<F>) -> Result<Submodule<F>> {
    let ring = m.ring();
    if !ring.has_local_structure() {
        return Err(Error::NotLocal);
    }
    let (g, n) = (m.num_generators(), ring.nvars());
    if n == 0 {
        return Ok(Submodule::whole(m));
    }
    let columns = (0..g)
        .map(|c| {
            let mut v = vec![ring.zero(); g * n];
            for i in 0..n {
                v[i * g + c] = ring.var(i);
            }
            v
        })
        .collect();
    let x = Matrix::from_columns(g * n, columns);
    let pre = preimage(ring, &x, &m.presentation().repeat_diagonal(n))?;
    Submodule::new(m, pre.columns().to_vec())
}

/// `min { i : Ext^i(R/I, R) ≠ 0 }`, searched up to the number of variables
/// plus one.
pub fn grade<F: Field>(ideal: &Ideal<F>) -> Result<usize> {
    if ideal.is_zero() || ideal.is_unit() {
        return Err(Error::InvalidInput("grade needs a proper nonzero ideal".into()));
    }
    let ring = ideal.ring();
    let quotient = PresentedModule::cyclic_quotient(ring, ideal.generators());
    let r = PresentedModule::free(ring, 1);
    let cap = ring.nvars() + 1;
    let res = free_resolution(&quotient, cap + 1)?;
    for i in 0..=cap {
        if !ext_from_resolution(&res, i, &r)?.is_zero()? {
            return Ok(i);
        }
    }
    Err(Error::InvalidInput(format!("no nonvanishing Ext^i(R/I, R) for i <= {cap}")))
}

/// `Hom_{R/I}(I/I^2, R/I)` together with its comparison against
/// `Hom_R(I, R/I)`.
#[derive(Clone, Debug)]
pub struct ConormalDual<F: Field> {
    pub ring: Arc<QuotientRing<F>>,
    pub module: PresentedModule<F>,
    pub vanishes: bool,
    pub dimension: Option<usize>,
    pub adjunction_agrees: bool,
}

pub fn conormal_dual<F: Field>(ideal: &Ideal<F>) -> Result<ConormalDual<F>> {
    let ring = ideal.ring();
    if ideal.is_unit() {
        return Err(Error::InvalidInput("conormal module of the unit ideal".into()));
    }
    let mut rels: Vec<Poly<F>> = ring.relations().to_vec();
    rels.extend(ideal.generators().iter().cloned());
    let quotient_ring = QuotientRing::new(ring.base().clone(), &rels)?.with_degree_cap(ring.degree_cap()).into_ref();
    let presented = present_ideal(ring, ideal.generators())?;
    let conormal = PresentedModule::coker(&quotient_ring, presented.presentation().clone());
    let hom = hom_module(&conormal, &PresentedModule::free(&quotient_ring, 1))?;
    let module = hom.carrier;
    let vanishes = module.is_zero()?;
    let dimension = module.vector_dimension()?;

    let over_r = hom_module(&presented, &PresentedModule::cyclic_quotient(ring, ideal.generators()))?;
    let adjunction_agrees = over_r.is_zero()? == vanishes && over_r.vector_dimension()? == dimension;
    Ok(ConormalDual { ring: quotient_ring, module, vanishes, dimension, adjunction_agrees })
}

/// Artinian, local with maximal ideal generated by the variables, and a
/// one-dimensional socle.
pub fn is_artinian_gorenstein<F: Field>(ring: &Arc<QuotientRing<F>>) -> Result<bool> {
    if !ring.is_local_artinian() {
        return Ok(false);
    }
    Ok(socle(&PresentedModule::free(ring, 1))?.vector_dimension()? == Some(1))
}

/// `Ω^{-n} M := (Ω^n (M*))*` over an Artinian Gorenstein ring.
pub fn cosyzygy<F: Field>(m: &PresentedModule<F>, n: usize) -> Result<PresentedModule<F>> {
    if !is_artinian_gorenstein(m.ring())? {
        return Err(Error::NotGorenstein);
    }
    if n == 0 {
        return syzygy(m, 0);
    }
    let d = dual(m)?.carrier;
    let s = syzygy(&d, n)?;
    Ok(dual(&s)?.carrier.pruned())
}

/// `Ω^n M` for any integer `n`, negative values through [`cosyzygy`].
pub fn syzygy_any<F: Field>(m: &PresentedModule<F>, n: i64) -> Result<PresentedModule<F>> {
    if n >= 0 {
        syzygy(m, n as usize)
    } else {
        cosyzygy(m, n.unsigned_abs() as usize)
    }
}

/// `Ext^1(M, M)` summary. `ext1_dim` is `None` when the module has
/// infinite length.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RigidityVerdict {
    pub ext1_dim: Option<usize>,
    pub rigid: bool,
    pub free: bool,
}

pub fn rigidity<F: Field>(m: &PresentedModule<F>) -> Result<RigidityVerdict> {
    let e = ext(1, m, m)?;
    let rigid = e.is_zero()?;
    let ext1_dim = if rigid { Some(0) } else { e.vector_dimension()? };
    let free = m.is_free()?;
    debug_assert!(!free || rigid);
    Ok(RigidityVerdict { ext1_dim, rigid, free })
}

/// Multiplication by `r` is injective on `N`.
pub fn is_nonzerodivisor_on<F: Field>(r: &Poly<F>, n: &PresentedModule<F>) -> Result<bool> {
    let ring = n.ring();
    let h = n.num_generators();
    let scalar = Matrix::from_columns(
        h,
        (0..h).map(|c| (0..h).map(|i| if i == c { ring.reduce(r) } else { ring.zero() }).collect()).collect(),
    );
    let kernel = preimage(ring, &scalar, n.presentation())?;
    let rels = n.relations_gb()?;
    let base = ring.base();
    Ok(kernel.columns().iter().all(|c| rels.contains(base, &base.vector_from_polys(rels.module_order(), c))))
}

/// Whether `I` contains an `N`-regular element. Exact over local Artinian
/// rings; elsewhere generators and sums of pairs of generators are tried,
/// so `false` may be inconclusive.
pub fn contains_regular_element<F: Field>(ideal: &Ideal<F>, n: &PresentedModule<F>) -> Result<bool> {
    if n.is_zero()? {
        return Ok(true);
    }
    if ideal.is_unit() {
        return Ok(true);
    }
    let ring = ideal.ring();
    if ring.is_local_artinian() {
        return Ok(false);
    }
    let gens = ideal.canonical_generators();
    let mut candidates = gens.clone();
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            candidates.push(ring.add(&gens[i], &gens[j]));
        }
    }
    for c in &candidates {
        if is_nonzerodivisor_on(c, n)? {
            return Ok(true);
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests;
