//! Buchberger's algorithm for submodules of free modules `k[x]^r`, with the
//! sugar pair-selection strategy and both Buchberger criteria. Ideals are
//! the rank-one case.
//!
//! Submodules of `R^r` for a quotient `R = k[x]/J` are handled by adding the
//! products `g * e_i` for every `g` in a Gröbner basis of `J` and every
//! component `i`; pairs among those products are never formed since each
//! component already holds a Gröbner basis of `J`.

use std::cmp::{Ordering, Reverse};
use std::collections::{BinaryHeap, HashSet};

use super::{Monomial, MonomialOrder, Poly, PolyRing, Polynomial};
use crate::arith::Field;
use crate::error::{Error, Result};

/// How terms in different components compare.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ModuleOrder {
    /// Component first; a lower index is larger.
    PositionOverTerm,
    /// Monomial first, ties broken by component (lower index larger).
    TermOverPosition,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModTerm<E> {
    pub comp: usize,
    pub mono: Monomial,
    pub coeff: E,
}

/// Sparse element of a free module `k[x]^r`, terms strictly descending in
/// the module order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModVec<E> {
    terms: Vec<ModTerm<E>>,
}

impl<E> Default for ModVec<E> {
    fn default() -> Self {
        ModVec { terms: Vec::new() }
    }
}

impl<E> ModVec<E> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[ModTerm<E>] {
        &self.terms
    }

    pub fn lead(&self) -> Option<&ModTerm<E>> {
        self.terms.first()
    }

    pub fn lead_component(&self) -> Option<usize> {
        self.terms.first().map(|t| t.comp)
    }

    fn max_degree(&self) -> u32 {
        self.terms.iter().map(|t| t.mono.degree()).max().unwrap_or(0)
    }

    fn single_component(&self) -> bool {
        self.terms.windows(2).all(|w| w[0].comp == w[1].comp)
    }
}

fn cmp_terms(
    order: &MonomialOrder,
    module: ModuleOrder,
    (ca, ma): (usize, &Monomial),
    (cb, mb): (usize, &Monomial),
) -> Ordering {
    match module {
        ModuleOrder::PositionOverTerm => cb.cmp(&ca).then_with(|| order.cmp(ma, mb)),
        ModuleOrder::TermOverPosition => order.cmp(ma, mb).then_with(|| cb.cmp(&ca)),
    }
}

impl<F: Field> PolyRing<F> {
    pub fn cmp_module_terms(
        &self,
        module: ModuleOrder,
        a: (usize, &Monomial),
        b: (usize, &Monomial),
    ) -> Ordering {
        cmp_terms(self.order(), module, a, b)
    }

    /// Packs one polynomial per component into a module vector.
    pub fn vector_from_polys(&self, module: ModuleOrder, polys: &[Poly<F>]) -> ModVec<F::Elem> {
        let mut terms: Vec<ModTerm<F::Elem>> = polys
            .iter()
            .enumerate()
            .flat_map(|(comp, p)| {
                p.terms().iter().map(move |(m, c)| ModTerm { comp, mono: m.clone(), coeff: c.clone() })
            })
            .collect();
        if module == ModuleOrder::TermOverPosition {
            terms.sort_by(|a, b| self.cmp_module_terms(module, (b.comp, &b.mono), (a.comp, &a.mono)));
        }
        ModVec { terms }
    }

    /// Unpacks a module vector into `rank` polynomials.
    pub fn vector_to_polys(&self, v: &ModVec<F::Elem>, rank: usize) -> Vec<Poly<F>> {
        let mut per: Vec<Vec<(Monomial, F::Elem)>> = vec![Vec::new(); rank];
        for t in &v.terms {
            per[t.comp].push((t.mono.clone(), t.coeff.clone()));
        }
        per.into_iter()
            .map(|mut terms| {
                terms.sort_by(|a, b| self.order().cmp(&b.0, &a.0));
                Polynomial { terms }
            })
            .collect()
    }

    /// `a - c * m * b`.
    fn vec_sub_scaled(
        &self,
        module: ModuleOrder,
        a: &[ModTerm<F::Elem>],
        b: &ModVec<F::Elem>,
        m: &Monomial,
        c: &F::Elem,
    ) -> Vec<ModTerm<F::Elem>> {
        let k = self.field();
        let mut out = Vec::with_capacity(a.len() + b.terms.len());
        let mut i = 0;
        let mut bi = b.terms.iter().map(|t| (t.comp, t.mono.mul(m), k.mul(&t.coeff, c))).peekable();
        while i < a.len() {
            let Some((bc, bm, _)) = bi.peek() else { break };
            match self.cmp_module_terms(module, (a[i].comp, &a[i].mono), (*bc, bm)) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let (comp, mono, coeff) = bi.next().expect("peeked");
                    out.push(ModTerm { comp, mono, coeff: k.neg(&coeff) });
                }
                Ordering::Equal => {
                    let (_, _, coeff) = bi.next().expect("peeked");
                    let d = k.sub(&a[i].coeff, &coeff);
                    if !k.is_zero(&d) {
                        out.push(ModTerm { comp: a[i].comp, mono: a[i].mono.clone(), coeff: d });
                    }
                    i += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(bi.map(|(comp, mono, coeff)| ModTerm { comp, mono, coeff: k.neg(&coeff) }));
        out
    }

    fn vec_monic(&self, mut v: ModVec<F::Elem>) -> ModVec<F::Elem> {
        if let Some(lead) = v.terms.first() {
            if !self.field().is_one(&lead.coeff) {
                let inv = self.field().inv(&lead.coeff).expect("nonzero lead");
                for t in &mut v.terms {
                    t.coeff = self.field().mul(&t.coeff, &inv);
                }
            }
        }
        v
    }

    /// Full reduction of `v`; `find` returns a monic reducer whose lead
    /// divides the given term.
    fn vec_reduce<'a>(
        &self,
        module: ModuleOrder,
        v: ModVec<F::Elem>,
        find: impl Fn(usize, &Monomial) -> Option<&'a ModVec<F::Elem>>,
    ) -> ModVec<F::Elem>
    where
        F::Elem: 'a,
    {
        let mut terms = v.terms;
        let mut k = 0;
        while k < terms.len() {
            let (comp, mono) = (terms[k].comp, &terms[k].mono);
            match find(comp, mono) {
                Some(g) => {
                    let lead = g.lead().expect("reducer is nonzero");
                    let q = mono.div(&lead.mono).expect("lead divides");
                    let c = terms[k].coeff.clone();
                    let tail = self.vec_sub_scaled(module, &terms[k..], g, &q, &c);
                    terms.truncate(k);
                    terms.extend(tail);
                }
                None => k += 1,
            }
        }
        ModVec { terms }
    }
}

struct Entry<E> {
    v: ModVec<E>,
    sugar: u32,
    relation: bool,
    single: bool,
}

struct Engine<'a, F: Field> {
    ring: &'a PolyRing<F>,
    module: ModuleOrder,
    basis: Vec<Entry<F::Elem>>,
    by_comp: Vec<Vec<usize>>,
    queue: BinaryHeap<Reverse<(u32, u32, usize, usize)>>,
    pending: HashSet<(usize, usize)>,
}

impl<'a, F: Field> Engine<'a, F> {
    fn lead_mono(&self, i: usize) -> &Monomial {
        &self.basis[i].v.terms[0].mono
    }

    fn reduce(&self, v: ModVec<F::Elem>) -> ModVec<F::Elem> {
        self.ring.vec_reduce(self.module, v, |comp, mono| {
            self.by_comp[comp]
                .iter()
                .find(|&&i| self.lead_mono(i).divides(mono))
                .map(|&i| &self.basis[i].v)
        })
    }

    fn insert(&mut self, v: ModVec<F::Elem>, sugar: u32, relation: bool) {
        let idx = self.basis.len();
        let comp = v.terms[0].comp;
        let single = v.single_component();
        let lead = v.terms[0].mono.clone();
        for &k in &self.by_comp[comp] {
            let other = &self.basis[k];
            if other.relation && relation {
                continue;
            }
            let klead = &other.v.terms[0].mono;
            if other.single && single && klead.is_coprime(&lead) {
                continue;
            }
            let lcm = klead.lcm(&lead);
            let s = (other.sugar + lcm.degree() - klead.degree())
                .max(sugar + lcm.degree() - lead.degree());
            self.queue.push(Reverse((s, lcm.degree(), idx, k)));
            self.pending.insert((k, idx));
        }
        self.basis.push(Entry { v, sugar, relation, single });
        self.by_comp[comp].push(idx);
    }

    fn chain_criterion(&self, i: usize, j: usize, lcm: &Monomial, comp: usize) -> bool {
        let pend = |a: usize, b: usize| self.pending.contains(&(a.min(b), a.max(b)));
        self.by_comp[comp].iter().any(|&k| {
            k != i && k != j && self.lead_mono(k).divides(lcm) && !pend(i, k) && !pend(j, k)
        })
    }

    fn spoly(&self, i: usize, j: usize, lcm: &Monomial) -> ModVec<F::Elem> {
        let (a, b) = (&self.basis[i].v, &self.basis[j].v);
        let qa = lcm.div(&a.terms[0].mono).expect("divides lcm");
        let qb = lcm.div(&b.terms[0].mono).expect("divides lcm");
        let one = self.ring.field().one();
        let scaled_a: Vec<ModTerm<F::Elem>> = a
            .terms
            .iter()
            .map(|t| ModTerm { comp: t.comp, mono: t.mono.mul(&qa), coeff: t.coeff.clone() })
            .collect();
        ModVec { terms: self.ring.vec_sub_scaled(self.module, &scaled_a, b, &qb, &one) }
    }

    fn run(&mut self, cap: Option<u32>) -> Result<()> {
        while let Some(Reverse((sugar, _, j, i))) = self.queue.pop() {
            self.pending.remove(&(i, j));
            let comp = self.basis[i].v.terms[0].comp;
            let lcm = self.lead_mono(i).lcm(self.lead_mono(j));
            if self.chain_criterion(i, j, &lcm, comp) {
                continue;
            }
            if let Some(cap) = cap {
                if sugar > cap {
                    return Err(Error::DegreeCapExceeded(cap));
                }
            }
            let r = self.reduce(self.spoly(i, j, &lcm));
            if !r.is_zero() {
                let r = self.ring.vec_monic(r);
                let sugar = sugar.max(r.max_degree());
                self.insert(r, sugar, false);
            }
        }
        Ok(())
    }
}

/// Reduced Gröbner basis of a submodule of `k[x]^rank` (or of `R^rank`
/// when ring relations were supplied).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleGb<E> {
    module: ModuleOrder,
    rank: usize,
    elems: Vec<ModVec<E>>,
}

impl<E: Clone + PartialEq> ModuleGb<E> {
    /// Computes the reduced Gröbner basis of `gens + relations * k[x]^rank`.
    /// `relations` must be a Gröbner basis of the ring relations.
    pub fn compute<F: Field<Elem = E>>(
        ring: &PolyRing<F>,
        module: ModuleOrder,
        rank: usize,
        gens: Vec<ModVec<E>>,
        relations: &[Poly<F>],
        degree_cap: Option<u32>,
    ) -> Result<Self> {
        let mut engine = Engine {
            ring,
            module,
            basis: Vec::new(),
            by_comp: vec![Vec::new(); rank],
            queue: BinaryHeap::new(),
            pending: HashSet::new(),
        };
        for comp in 0..rank {
            for g in relations {
                if g.is_zero() {
                    continue;
                }
                let v = ModVec {
                    terms: g
                        .terms()
                        .iter()
                        .map(|(m, c)| ModTerm { comp, mono: m.clone(), coeff: c.clone() })
                        .collect(),
                };
                let sugar = v.max_degree();
                engine.insert(ring.vec_monic(v), sugar, true);
            }
        }
        for g in gens {
            debug_assert!(g.terms.iter().all(|t| t.comp < rank));
            let sugar = g.max_degree();
            let r = engine.reduce(g);
            if !r.is_zero() {
                engine.insert(ring.vec_monic(r), sugar, false);
            }
        }
        engine.run(degree_cap)?;

        let mut elems: Vec<ModVec<E>> = engine.basis.into_iter().map(|e| e.v).collect();
        let key = |v: &ModVec<E>| (v.terms[0].comp, v.terms[0].mono.clone());
        elems.sort_by(|a, b| {
            let (ca, ma) = key(a);
            let (cb, mb) = key(b);
            ring.cmp_module_terms(module, (ca, &ma), (cb, &mb))
        });
        let mut minimal: Vec<ModVec<E>> = Vec::new();
        for v in elems {
            let (c, m) = key(&v);
            if !minimal.iter().any(|g| g.terms[0].comp == c && g.terms[0].mono.divides(&m)) {
                minimal.push(v);
            }
        }
        let mut reduced = Vec::with_capacity(minimal.len());
        for idx in 0..minimal.len() {
            let v = minimal[idx].clone();
            let r = ring.vec_reduce(module, v, |comp, mono| {
                minimal.iter().enumerate().find_map(|(j, g)| {
                    (j != idx && g.terms[0].comp == comp && g.terms[0].mono.divides(mono)).then_some(g)
                })
            });
            reduced.push(ring.vec_monic(r));
        }
        Ok(ModuleGb { module, rank, elems: reduced })
    }

    pub fn module_order(&self) -> ModuleOrder {
        self.module
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Basis elements in ascending order of their leading terms.
    pub fn elements(&self) -> &[ModVec<E>] {
        &self.elems
    }

    pub fn reduce<F: Field<Elem = E>>(&self, ring: &PolyRing<F>, v: ModVec<E>) -> ModVec<E> {
        ring.vec_reduce(self.module, v, |comp, mono| {
            self.elems
                .iter()
                .find(|g| g.terms[0].comp == comp && g.terms[0].mono.divides(mono))
        })
    }

    pub fn contains<F: Field<Elem = E>>(&self, ring: &PolyRing<F>, v: &ModVec<E>) -> bool {
        self.reduce(ring, v.clone()).is_zero()
    }

    /// Leading monomials of the basis elements with leading component `comp`.
    pub fn leads_in(&self, comp: usize) -> Vec<&Monomial> {
        self.elems.iter().filter(|g| g.terms[0].comp == comp).map(|g| &g.terms[0].mono).collect()
    }

    /// True iff the submodule is the whole free module.
    pub fn is_everything(&self) -> bool {
        (0..self.rank).all(|c| self.leads_in(c).iter().any(|m| m.is_one()))
    }

    /// Standard monomials per component, or `None` if some component has
    /// infinitely many.
    pub fn standard_monomials(&self, nvars: usize) -> Option<Vec<Vec<Monomial>>> {
        (0..self.rank).map(|c| staircase(&self.leads_in(c), nvars)).collect()
    }

    /// `dim_k` of the quotient `k[x]^rank / U`, `None` if infinite.
    pub fn quotient_dimension(&self, nvars: usize) -> Option<usize> {
        let mut total = 0;
        for c in 0..self.rank {
            total += staircase_count(&self.leads_in(c), nvars)?;
        }
        Some(total)
    }
}

/// Monomials divisible by none of `leads`, if finitely many.
pub(crate) fn staircase(leads: &[&Monomial], nvars: usize) -> Option<Vec<Monomial>> {
    let mut bound = vec![None; nvars];
    for m in leads {
        if m.is_one() {
            return Some(Vec::new());
        }
        if let Some((i, e)) = m.pure_power() {
            bound[i] = Some(bound[i].map_or(e, |b: u32| b.min(e)));
        }
    }
    let bound: Vec<u32> = bound.into_iter().collect::<Option<_>>()?;
    let mut out = Vec::new();
    let mut exps = vec![0u32; nvars];
    loop {
        let m = Monomial::from_exponents(&exps);
        if !leads.iter().any(|l| l.divides(&m)) {
            out.push(m);
        }
        // odometer increment
        let mut i = 0;
        loop {
            if i == nvars {
                return Some(out);
            }
            exps[i] += 1;
            if exps[i] < bound[i] {
                break;
            }
            exps[i] = 0;
            i += 1;
        }
    }
}

fn staircase_count(leads: &[&Monomial], nvars: usize) -> Option<usize> {
    staircase(leads, nvars).map(|s| s.len())
}

/// Reduced Gröbner basis of a polynomial ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis<E> {
    generators: Vec<Polynomial<E>>,
    order: MonomialOrder,
}

impl<E> GroebnerBasis<E> {
    /// Generators sorted by descending leading monomial, each monic.
    pub fn generators(&self) -> &[Polynomial<E>] {
        &self.generators
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.generators.iter().any(|g| g.lead_monomial().is_some_and(|m| m.is_one()))
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn reduced(&self) -> bool {
        true
    }
}

fn as_vector<E: Clone>(p: &Polynomial<E>) -> ModVec<E> {
    ModVec {
        terms: p
            .terms()
            .iter()
            .map(|(m, c)| ModTerm { comp: 0, mono: m.clone(), coeff: c.clone() })
            .collect(),
    }
}

fn as_poly<E: Clone>(v: &ModVec<E>) -> Polynomial<E> {
    Polynomial { terms: v.terms.iter().map(|t| (t.mono.clone(), t.coeff.clone())).collect() }
}

pub(crate) fn ideal_gb_with_cap<F: Field>(
    ring: &PolyRing<F>,
    gens: &[Poly<F>],
    cap: Option<u32>,
) -> Result<GroebnerBasis<F::Elem>> {
    let vecs = gens.iter().map(as_vector).collect();
    let gb = ModuleGb::compute(ring, ModuleOrder::PositionOverTerm, 1, vecs, &[], cap)?;
    let mut generators: Vec<Poly<F>> = gb.elems.iter().map(as_poly).collect();
    generators.reverse();
    Ok(GroebnerBasis { generators, order: ring.order().clone() })
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
pub fn groebner_basis<F: Field>(ring: &PolyRing<F>, gens: &[Poly<F>]) -> GroebnerBasis<F::Elem> {
    ideal_gb_with_cap(ring, gens, None).expect("no degree cap")
}

/// Remainder of `f` on division by `gb`; zero iff `f` lies in the ideal.
pub fn normal_form<F: Field>(ring: &PolyRing<F>, f: &Poly<F>, gb: &GroebnerBasis<F::Elem>) -> Poly<F> {
    let reducers: Vec<ModVec<F::Elem>> = gb.generators.iter().map(as_vector).collect();
    let r = ring.vec_reduce(ModuleOrder::PositionOverTerm, as_vector(f), |_, mono| {
        reducers.iter().find(|g| g.terms[0].mono.divides(mono))
    });
    as_poly(&r)
}

/// Equality of ideals through their reduced bases.
pub fn ideal_equal<E: PartialEq>(a: &GroebnerBasis<E>, b: &GroebnerBasis<E>) -> Result<bool> {
    if a.order != b.order {
        return Err(Error::OrderMismatch);
    }
    Ok(a.generators == b.generators)
}
