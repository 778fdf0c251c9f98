use std::fmt;
use std::sync::Arc;

use super::groebner::{ideal_gb_with_cap, staircase};
use super::{
    groebner_basis, ideal_equal, normal_form, GroebnerBasis, ModuleGb, ModuleOrder, Monomial, Poly,
    PolyRing,
};
use crate::arith::Field;
use crate::error::{Error, Result};

/// `k[x_1, ..., x_n] / J`, elements represented by normal forms modulo the
/// reduced Gröbner basis of `J`.
#[derive(Clone, Debug)]
pub struct QuotientRing<F: Field> {
    base: PolyRing<F>,
    defining: GroebnerBasis<F::Elem>,
    graded: bool,
    standard: Option<Vec<Monomial>>,
    local: bool,
    degree_cap: Option<u32>,
}

impl<F: Field> PartialEq for QuotientRing<F> {
    fn eq(&self, other: &Self) -> bool {
        self.base == other.base && self.defining == other.defining
    }
}

impl<F: Field> QuotientRing<F> {
    pub fn new(base: PolyRing<F>, defining: &[Poly<F>]) -> Result<Self> {
        let defining = groebner_basis(&base, defining);
        if defining.is_unit_ideal() {
            return Err(Error::ZeroRing);
        }
        let graded = defining.generators().iter().all(|g| base.is_homogeneous(g));
        let leads: Vec<&Monomial> =
            defining.generators().iter().filter_map(|g| g.lead_monomial()).collect();
        let standard = staircase(&leads, base.nvars());
        let mut ring = QuotientRing { base, defining, graded, standard, local: false, degree_cap: None };
        ring.local = ring.vector_dimension().is_some_and(|dim| {
            (0..ring.nvars()).all(|i| {
                let p = ring.base.term(Monomial::var(ring.nvars(), i, dim as u32), ring.field().one());
                ring.reduce(&p).is_zero()
            })
        });
        Ok(ring)
    }

    /// The polynomial ring itself.
    pub fn free(base: PolyRing<F>) -> Self {
        Self::new(base, &[]).expect("the zero ideal is proper")
    }

    /// Bounds the sugar degree of every Gröbner computation over this ring.
    pub fn with_degree_cap(mut self, cap: Option<u32>) -> Self {
        self.degree_cap = cap;
        self
    }

    pub fn into_ref(self) -> Arc<Self> {
        Arc::new(self)
    }

    pub fn base(&self) -> &PolyRing<F> {
        &self.base
    }

    pub fn field(&self) -> &F {
        self.base.field()
    }

    pub fn nvars(&self) -> usize {
        self.base.nvars()
    }

    pub fn defining(&self) -> &GroebnerBasis<F::Elem> {
        &self.defining
    }

    pub fn relations(&self) -> &[Poly<F>] {
        self.defining.generators()
    }

    pub fn degree_cap(&self) -> Option<u32> {
        self.degree_cap
    }

    pub fn is_graded(&self) -> bool {
        self.graded
    }

    /// Standard monomials, when there are finitely many.
    pub fn standard_monomials(&self) -> Option<&[Monomial]> {
        self.standard.as_deref()
    }

    pub fn is_artinian(&self) -> bool {
        self.standard.is_some()
    }

    pub fn vector_dimension(&self) -> Option<usize> {
        self.standard.as_ref().map(|s| s.len())
    }

    /// Artinian with every variable nilpotent, i.e. local with maximal ideal
    /// generated by the variables.
    pub fn is_local_artinian(&self) -> bool {
        self.local
    }

    /// Graded with positive weights (so the variables generate the unique
    /// homogeneous maximal ideal) or local Artinian.
    pub fn has_local_structure(&self) -> bool {
        self.graded || self.is_local_artinian()
    }

    pub fn reduce(&self, f: &Poly<F>) -> Poly<F> {
        if self.defining.is_zero_ideal() {
            return f.clone();
        }
        normal_form(&self.base, f, &self.defining)
    }

    pub fn zero(&self) -> Poly<F> {
        self.base.zero()
    }

    pub fn one(&self) -> Poly<F> {
        self.base.one()
    }

    pub fn var(&self, i: usize) -> Poly<F> {
        self.reduce(&self.base.var(i))
    }

    pub fn add(&self, a: &Poly<F>, b: &Poly<F>) -> Poly<F> {
        self.base.add(a, b)
    }

    pub fn sub(&self, a: &Poly<F>, b: &Poly<F>) -> Poly<F> {
        self.base.sub(a, b)
    }

    pub fn neg(&self, a: &Poly<F>) -> Poly<F> {
        self.base.neg(a)
    }

    pub fn scale(&self, a: &Poly<F>, c: &F::Elem) -> Poly<F> {
        self.base.scale(a, c)
    }

    /// Normal form of the product.
    pub fn mul(&self, a: &Poly<F>, b: &Poly<F>) -> Poly<F> {
        self.reduce(&self.base.mul(a, b))
    }

    pub fn parse(&self, text: &str) -> Result<Poly<F>> {
        Ok(self.reduce(&self.base.parse(text)?))
    }

    pub fn render(&self, a: &Poly<F>) -> String {
        self.base.render(a)
    }

    /// Inverse of a unit: nonzero constants always, and in a local Artinian
    /// ring every element with nonzero constant term.
    pub fn unit_inverse(&self, a: &Poly<F>) -> Option<Poly<F>> {
        let k = self.field();
        let c = self.base.constant_term(a);
        let c_inv = k.inv(&c)?;
        if self.base.is_constant(a) {
            return Some(self.base.constant(c_inv));
        }
        if !self.is_local_artinian() {
            return None;
        }
        // a = c (1 - n) with n nilpotent, so a^-1 = c^-1 (1 + n + n^2 + ...)
        let n = self.sub(&self.one(), &self.scale(a, &c_inv));
        let mut acc = self.one();
        let mut power = self.one();
        loop {
            power = self.mul(&power, &n);
            if power.is_zero() {
                break;
            }
            acc = self.add(&acc, &power);
        }
        Some(self.scale(&acc, &c_inv))
    }

    pub fn is_unit(&self, a: &Poly<F>) -> bool {
        let c = self.base.constant_term(a);
        !self.field().is_zero(&c) && (self.base.is_constant(a) || self.is_local_artinian())
    }

    /// Generators of the annihilator `(0 : a)` in `R`, as normal forms.
    pub fn annihilator_of(&self, a: &Poly<F>, degree_cap: Option<u32>) -> Result<Vec<Poly<F>>> {
        let order = ModuleOrder::PositionOverTerm;
        let v = self.base.vector_from_polys(order, &[a.clone(), self.one()]);
        let gb = ModuleGb::compute(&self.base, order, 2, vec![v], self.relations(), degree_cap)?;
        Ok(gb
            .elements()
            .iter()
            .filter(|g| g.lead_component() == Some(1))
            .map(|g| self.reduce(&self.base.vector_to_polys(g, 2)[1]))
            .filter(|p| !p.is_zero())
            .collect())
    }

    /// Exact test through the ideal quotient `(0 : a)`; the cap bounds the
    /// Gröbner computation.
    pub fn is_zerodivisor(&self, a: &Poly<F>, degree_cap: u32) -> Result<bool> {
        Ok(!self.annihilator_of(a, Some(degree_cap))?.is_empty())
    }

    /// Gröbner basis of `I + J` in the polynomial ring.
    pub fn ideal_basis(&self, gens: &[Poly<F>]) -> Result<GroebnerBasis<F::Elem>> {
        let mut all: Vec<Poly<F>> = self.relations().to_vec();
        all.extend(gens.iter().cloned());
        ideal_gb_with_cap(&self.base, &all, self.degree_cap)
    }

    pub fn display<'a>(&'a self) -> impl fmt::Display + 'a {
        DisplayRing(self)
    }
}

struct DisplayRing<'a, F: Field>(&'a QuotientRing<F>);

impl<F: Field> fmt::Display for DisplayRing<'_, F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.0;
        write!(f, "{}[{}]", r.field().spec(), r.base.vars().join(","))?;
        if !r.relations().is_empty() {
            let rels: Vec<String> = r.relations().iter().map(|g| r.render(g)).collect();
            write!(f, "/({})", rels.join(", "))?;
        }
        Ok(())
    }
}

/// An ideal of a quotient ring, kept with the reduced Gröbner basis of its
/// preimage in the polynomial ring.
#[derive(Clone, Debug)]
pub struct Ideal<F: Field> {
    ring: Arc<QuotientRing<F>>,
    generators: Vec<Poly<F>>,
    basis: GroebnerBasis<F::Elem>,
}

impl<F: Field> Ideal<F> {
    pub fn new(ring: &Arc<QuotientRing<F>>, gens: &[Poly<F>]) -> Result<Self> {
        let generators: Vec<Poly<F>> =
            gens.iter().map(|g| ring.reduce(g)).filter(|g| !g.is_zero()).collect();
        let basis = ring.ideal_basis(&generators)?;
        Ok(Ideal { ring: ring.clone(), generators, basis })
    }

    pub fn parse(ring: &Arc<QuotientRing<F>>, gens: &[&str]) -> Result<Self> {
        let gens = gens.iter().map(|s| ring.parse(s)).collect::<Result<Vec<_>>>()?;
        Self::new(ring, &gens)
    }

    pub fn ring(&self) -> &Arc<QuotientRing<F>> {
        &self.ring
    }

    /// Generators as supplied, reduced and with zeros dropped.
    pub fn generators(&self) -> &[Poly<F>] {
        &self.generators
    }

    pub fn basis(&self) -> &GroebnerBasis<F::Elem> {
        &self.basis
    }

    /// Reduced basis elements not lying in the defining ideal, ascending by
    /// leading monomial: a canonical generating set of the ideal in `R`.
    pub fn canonical_generators(&self) -> Vec<Poly<F>> {
        let mut out: Vec<Poly<F>> = self
            .basis
            .generators()
            .iter()
            .map(|g| self.ring.reduce(g))
            .filter(|g| !g.is_zero())
            .collect();
        out.dedup();
        out.reverse();
        out
    }

    pub fn contains(&self, f: &Poly<F>) -> bool {
        normal_form(self.ring.base(), f, &self.basis).is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.basis == *self.ring.defining()
    }

    pub fn is_unit(&self) -> bool {
        self.basis.is_unit_ideal()
    }

    pub fn equals(&self, other: &Ideal<F>) -> Result<bool> {
        if *self.ring != *other.ring {
            return Err(Error::RingMismatch);
        }
        ideal_equal(&self.basis, &other.basis)
    }

    pub fn contains_ideal(&self, other: &Ideal<F>) -> bool {
        other.generators.iter().all(|g| self.contains(g))
    }

    pub fn render(&self) -> Vec<String> {
        self.canonical_generators().iter().map(|g| self.ring.render(g)).collect()
    }
}
