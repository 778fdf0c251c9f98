//! Multivariate polynomials over exact fields, monomial orders, Gröbner
//! bases and quotient rings.

mod groebner;
mod parse;
mod quotient;

use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use crate::arith::Field;
use crate::error::{Error, Result};

pub use groebner::{
    groebner_basis, ideal_equal, normal_form, GroebnerBasis, ModTerm, ModVec, ModuleGb,
    ModuleOrder,
};
pub use parse::{parse_rational_poly, RationalPoly};
pub use quotient::{Ideal, QuotientRing};

/// Exponent vector of a monomial together with its total degree.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: SmallVec<[u16; 6]>,
    degree: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: SmallVec::from_elem(0, nvars), degree: 0 }
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        let exps: SmallVec<[u16; 6]> =
            exps.iter().map(|&e| u16::try_from(e).expect("exponent overflow")).collect();
        let degree = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, degree }
    }

    pub fn var(nvars: usize, i: usize, e: u32) -> Self {
        let mut m = Self::one(nvars);
        m.exps[i] = u16::try_from(e).expect("exponent overflow");
        m.degree = e;
        m
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    pub fn exponents(&self) -> impl Iterator<Item = u32> + '_ {
        self.exps.iter().map(|&e| e as u32)
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
            .collect();
        Monomial { exps, degree: self.degree + other.degree }
    }

    /// `self / other` if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect();
        Some(Monomial { exps, degree: self.degree - other.degree })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: SmallVec<[u16; 6]> =
            self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect();
        let degree = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, degree }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Index of the variable if this monomial is a pure power `x_i^e`, e > 0.
    pub fn pure_power(&self) -> Option<(usize, u32)> {
        let mut found = None;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some((i, e as u32));
            }
        }
        found
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Grevlex,
    Lex,
    Grlex,
}

/// A global monomial order. `precedence[0]` is the largest variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    precedence: Vec<usize>,
}

impl MonomialOrder {
    pub fn new(kind: OrderKind, precedence: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; precedence.len()];
        for &v in &precedence {
            if v >= seen.len() || seen[v] {
                return Err(Error::InvalidInput("variable precedence is not a permutation".into()));
            }
            seen[v] = true;
        }
        Ok(MonomialOrder { kind, precedence })
    }

    /// The order with textual variable precedence.
    pub fn standard(kind: OrderKind, nvars: usize) -> Self {
        MonomialOrder { kind, precedence: (0..nvars).collect() }
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self.kind {
            OrderKind::Lex => self.lex(a, b),
            OrderKind::Grlex => a.degree.cmp(&b.degree).then_with(|| self.lex(a, b)),
            OrderKind::Grevlex => a.degree.cmp(&b.degree).then_with(|| {
                for &v in self.precedence.iter().rev() {
                    match a.exps[v].cmp(&b.exps[v]) {
                        Ordering::Equal => continue,
                        // smaller exponent in the last variable wins
                        o => return o.reverse(),
                    }
                }
                Ordering::Equal
            }),
        }
    }

    fn lex(&self, a: &Monomial, b: &Monomial) -> Ordering {
        for &v in &self.precedence {
            match a.exps[v].cmp(&b.exps[v]) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }
}

/// Sparse polynomial; terms sorted strictly descending in the ring's order,
/// no zero coefficients. Arithmetic lives on [`PolyRing`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial<E> {
    terms: Vec<(Monomial, E)>,
}

impl<E> Polynomial<E> {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Monomial, E)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, E)> {
        self.terms
    }

    pub fn lead(&self) -> Option<&(Monomial, E)> {
        self.terms.first()
    }

    pub fn lead_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest total degree of a term.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.degree()).max()
    }
}

pub type Poly<F> = Polynomial<<F as Field>::Elem>;

/// Polynomial ring `k[x_1, ..., x_n]` with a monomial order and variable
/// weights (all 1 unless given).
#[derive(Clone, Debug, PartialEq)]
pub struct PolyRing<F: Field> {
    field: F,
    vars: Vec<String>,
    order: MonomialOrder,
    weights: Vec<u32>,
}

impl<F: Field> PolyRing<F> {
    pub fn new(field: F, vars: &[&str]) -> Result<Self> {
        let vars: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        let n = vars.len();
        Self::with_order(field, vars, MonomialOrder::standard(OrderKind::Grevlex, n), vec![1; n])
    }

    pub fn with_order(
        field: F,
        vars: Vec<String>,
        order: MonomialOrder,
        weights: Vec<u32>,
    ) -> Result<Self> {
        for (i, v) in vars.iter().enumerate() {
            let valid = v.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                && v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid {
                return Err(Error::InvalidInput(format!("invalid variable name `{v}`")));
            }
            if vars[..i].contains(v) {
                return Err(Error::InvalidInput(format!("duplicate variable `{v}`")));
            }
        }
        if order.precedence.len() != vars.len() || weights.len() != vars.len() {
            return Err(Error::InvalidInput("order or weights do not match the variables".into()));
        }
        if weights.contains(&0) {
            return Err(Error::InvalidInput("variable weights must be positive".into()));
        }
        Ok(PolyRing { field, vars, order, weights })
    }

    /// Same ring with another monomial order.
    pub fn reordered(&self, order: MonomialOrder) -> Result<Self> {
        Self::with_order(self.field.clone(), self.vars.clone(), order, self.weights.clone())
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn weighted_degree(&self, m: &Monomial) -> i64 {
        m.exponents().zip(&self.weights).map(|(e, w)| e as i64 * *w as i64).sum()
    }

    pub fn cmp_monomials(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp(a, b)
    }

    pub fn zero(&self) -> Poly<F> {
        Polynomial::zero()
    }

    pub fn one(&self) -> Poly<F> {
        self.constant(self.field.one())
    }

    pub fn constant(&self, c: F::Elem) -> Poly<F> {
        self.term(Monomial::one(self.nvars()), c)
    }

    pub fn term(&self, m: Monomial, c: F::Elem) -> Poly<F> {
        if self.field.is_zero(&c) {
            Polynomial::zero()
        } else {
            Polynomial { terms: vec![(m, c)] }
        }
    }

    pub fn var(&self, i: usize) -> Poly<F> {
        self.term(Monomial::var(self.nvars(), i, 1), self.field.one())
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms(&self, mut terms: Vec<(Monomial, F::Elem)>) -> Poly<F> {
        terms.sort_by(|a, b| self.order.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, F::Elem)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 = self.field.add(&last.1, &c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|t| !self.field.is_zero(&t.1));
        Polynomial { terms: out }
    }

    pub fn add(&self, a: &Poly<F>, b: &Poly<F>) -> Poly<F> {
        self.combine(a, b, false)
    }

    pub fn sub(&self, a: &Poly<F>, b: &Poly<F>) -> Poly<F> {
        self.combine(a, b, true)
    }

    fn combine(&self, a: &Poly<F>, b: &Poly<F>, negate: bool) -> Poly<F> {
        let k = &self.field;
        let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < a.terms.len() && j < b.terms.len() {
            let (ma, ca) = &a.terms[i];
            let (mb, cb) = &b.terms[j];
            match self.order.cmp(ma, mb) {
                Ordering::Greater => {
                    out.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((mb.clone(), if negate { k.neg(cb) } else { cb.clone() }));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { k.sub(ca, cb) } else { k.add(ca, cb) };
                    if !k.is_zero(&c) {
                        out.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a.terms[i..].iter().cloned());
        out.extend(
            b.terms[j..].iter().map(|(m, c)| (m.clone(), if negate { k.neg(c) } else { c.clone() })),
        );
        Polynomial { terms: out }
    }

    pub fn neg(&self, a: &Poly<F>) -> Poly<F> {
        Polynomial { terms: a.terms.iter().map(|(m, c)| (m.clone(), self.field.neg(c))).collect() }
    }

    pub fn scale(&self, a: &Poly<F>, c: &F::Elem) -> Poly<F> {
        if self.field.is_zero(c) {
            return Polynomial::zero();
        }
        Polynomial { terms: a.terms.iter().map(|(m, x)| (m.clone(), self.field.mul(x, c))).collect() }
    }

    /// `c * m * a`.
    pub fn mul_term(&self, a: &Poly<F>, m: &Monomial, c: &F::Elem) -> Poly<F> {
        if self.field.is_zero(c) {
            return Polynomial::zero();
        }
        Polynomial {
            terms: a.terms.iter().map(|(n, x)| (n.mul(m), self.field.mul(x, c))).collect(),
        }
    }

    pub fn mul(&self, a: &Poly<F>, b: &Poly<F>) -> Poly<F> {
        let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
        let mut acc = Polynomial::zero();
        for (m, c) in &small.terms {
            acc = self.add(&acc, &self.mul_term(large, m, c));
        }
        acc
    }

    pub fn pow(&self, a: &Poly<F>, e: u32) -> Poly<F> {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self, a: &Poly<F>) -> Poly<F> {
        match a.lead() {
            None => Polynomial::zero(),
            Some((_, c)) => {
                let inv = self.field.inv(c).expect("leading coefficient is nonzero");
                self.scale(a, &inv)
            }
        }
    }

    pub fn constant_term(&self, a: &Poly<F>) -> F::Elem {
        match a.terms.last() {
            Some((m, c)) if m.is_one() => c.clone(),
            _ => self.field.zero(),
        }
    }

    pub fn is_constant(&self, a: &Poly<F>) -> bool {
        a.terms.iter().all(|(m, _)| m.is_one())
    }

    /// Weighted degree if the polynomial is homogeneous for the ring weights;
    /// `None` for the zero polynomial and for inhomogeneous input.
    pub fn homogeneous_degree(&self, a: &Poly<F>) -> Option<i64> {
        let mut degs = a.terms.iter().map(|(m, _)| self.weighted_degree(m));
        let d = degs.next()?;
        degs.all(|e| e == d).then_some(d)
    }

    pub fn is_homogeneous(&self, a: &Poly<F>) -> bool {
        a.is_zero() || self.homogeneous_degree(a).is_some()
    }

    /// Substitutes 0 for all variables.
    pub fn eval_origin(&self, a: &Poly<F>) -> F::Elem {
        self.constant_term(a)
    }

    pub fn render(&self, a: &Poly<F>) -> String {
        parse::render(self, a)
    }

    pub fn parse(&self, text: &str) -> Result<Poly<F>> {
        let q = parse_rational_poly(text, &self.vars)?;
        self.from_rational(&q)
    }

    pub fn from_rational(&self, q: &RationalPoly) -> Result<Poly<F>> {
        let mut terms = Vec::with_capacity(q.terms.len());
        for (exps, c) in &q.terms {
            let c = self.field.from_rational(c).ok_or(Error::DivisionByZero)?;
            terms.push((Monomial::from_exponents(exps), c));
        }
        Ok(self.from_terms(terms))
    }

    pub fn display<'a>(&'a self, a: &'a Poly<F>) -> impl fmt::Display + 'a {
        DisplayPoly { ring: self, poly: a }
    }
}

struct DisplayPoly<'a, F: Field> {
    ring: &'a PolyRing<F>,
    poly: &'a Poly<F>,
}

impl<F: Field> fmt::Display for DisplayPoly<'_, F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.ring.render(self.poly))
    }
}
