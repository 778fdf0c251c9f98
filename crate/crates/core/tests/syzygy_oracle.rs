//! Syzygies of homogeneous ideals found by brute-force linear algebra in
//! each degree, checked against the Gröbner presentation.

use std::sync::Arc;

use proptest::prelude::*;
use tracemod::fdalg::nullspace;
use tracemod::fpmod::{present_ideal, resolve, PresentedModule, Submodule};
use tracemod::{Field, Monomial, Poly, PolyRing, PrimeField, QuotientRing};

fn ring(p: u64, vars: &[&str], rels: &[&str]) -> Arc<QuotientRing<PrimeField>> {
    let base = PolyRing::new(PrimeField::new(p).unwrap(), vars).unwrap();
    let rels: Vec<_> = rels.iter().map(|s| base.parse(s).unwrap()).collect();
    QuotientRing::new(base, &rels).unwrap().into_ref()
}

fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    if n == 0 {
        return if d == 0 { vec![Monomial::one(0)] } else { Vec::new() };
    }
    let mut out = Vec::new();
    let mut exps = vec![0u32; n];
    fn go(i: usize, left: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i + 1 == exps.len() {
            exps[i] = left;
            out.push(Monomial::from_exponents(exps));
            return;
        }
        for e in 0..=left {
            exps[i] = e;
            go(i + 1, left - e, exps, out);
        }
    }
    go(0, d, &mut exps, &mut out);
    out
}

/// Standard monomials of degree `d`: a basis of `R_d`.
fn degree_basis<F: Field>(r: &QuotientRing<F>, d: i64) -> Vec<Monomial> {
    if d < 0 {
        return Vec::new();
    }
    let base = r.base();
    monomials_of_degree(r.nvars(), d as u32)
        .into_iter()
        .filter(|m| {
            let p = base.term(m.clone(), base.field().one());
            r.reduce(&p) == p
        })
        .collect()
}

fn coordinates<F: Field>(p: &Poly<F>, basis: &[Monomial], field: &F) -> Vec<F::Elem> {
    basis
        .iter()
        .map(|m| p.terms().iter().find(|(t, _)| t == m).map(|(_, c)| c.clone()).unwrap_or_else(|| field.zero()))
        .collect()
}

/// A basis of the degree-`d` syzygies of `gens`, each a vector with entries
/// of degree `d - deg g_j`.
fn syzygies_in_degree<F: Field>(r: &QuotientRing<F>, gens: &[Poly<F>], d: i64) -> Vec<Vec<Poly<F>>> {
    let base = r.base();
    let k = base.field();
    let target = degree_basis(r, d);
    let mut unknowns = Vec::new();
    for (j, g) in gens.iter().enumerate() {
        let e = base.homogeneous_degree(g).expect("homogeneous generator");
        for m in degree_basis(r, d - e) {
            unknowns.push((j, m));
        }
    }
    let columns: Vec<Vec<F::Elem>> = unknowns
        .iter()
        .map(|(j, m)| coordinates(&r.reduce(&base.mul_term(&gens[*j], m, &k.one())), &target, k))
        .collect();
    let rows: Vec<Vec<F::Elem>> =
        (0..target.len()).map(|i| columns.iter().map(|c| c[i].clone()).collect()).collect();
    nullspace(k, rows, unknowns.len())
        .into_iter()
        .map(|x| {
            let mut v = vec![base.zero(); gens.len()];
            for ((j, m), c) in unknowns.iter().zip(&x) {
                if !k.is_zero(c) {
                    v[*j] = base.add(&v[*j], &base.term(m.clone(), c.clone()));
                }
            }
            v
        })
        .collect()
}

fn combine<F: Field>(r: &QuotientRing<F>, gens: &[Poly<F>], v: &[Poly<F>]) -> Poly<F> {
    gens.iter().zip(v).fold(r.zero(), |acc, (g, a)| r.add(&acc, &r.mul(g, a)))
}

/// Every oracle syzygy up to degree `top` lies in the span of the
/// presentation, and every presentation column is a syzygy.
fn agree<F: Field>(r: &Arc<QuotientRing<F>>, gens: &[Poly<F>], top: i64) -> Vec<usize> {
    let m = present_ideal(r, gens).unwrap();
    let a = m.presentation();
    for col in a.columns() {
        assert!(combine(r, gens, col).is_zero(), "presentation column is not a syzygy");
    }
    let free = PresentedModule::free(r, gens.len());
    let span = Submodule::new(&free, a.columns().to_vec()).unwrap();
    (0..=top)
        .map(|d| {
            let syz = syzygies_in_degree(r, gens, d);
            for v in &syz {
                assert!(combine(r, gens, v).is_zero());
                assert!(span.contains_vector(v).unwrap(), "degree {d} syzygy outside the presentation");
            }
            syz.len()
        })
        .collect()
}

#[test]
fn maximal_ideal_of_the_node() {
    // (a, b) with a x + b y = 0 in k[x,y]/(xy): a in (y), b in (x), so two
    // independent syzygies in each degree from 2 on.
    let r = ring(5, &["x", "y"], &["x*y"]);
    let gens = vec![r.parse("x").unwrap(), r.parse("y").unwrap()];
    assert_eq!(agree(&r, &gens, 6), vec![0, 0, 2, 2, 2, 2, 2]);
}

#[test]
fn principal_ideal_of_a_truncated_line() {
    // a x^2 = 0 in k[x]/(x^5) iff a in (x^3).
    let r = ring(3, &["x"], &["x^5"]);
    let gens = vec![r.parse("x^2").unwrap()];
    assert_eq!(agree(&r, &gens, 6), vec![0, 0, 0, 0, 0, 1, 1]);
}

#[test]
fn complete_intersection_has_koszul_syzygies() {
    let r = ring(7, &["x", "y", "z"], &[]);
    let gens = vec![r.parse("x^2").unwrap(), r.parse("y*z").unwrap()];
    // Only the Koszul relation (y z, -x^2) in degree 4, then its multiples.
    assert_eq!(agree(&r, &gens, 6), vec![0, 0, 0, 0, 1, 3, 6]);
}

#[test]
fn resolutions_square_to_zero() {
    let r = ring(2, &["x", "y"], &["x^2", "y^2"]);
    let m = present_ideal(&r, &[r.parse("x").unwrap(), r.parse("y").unwrap()]).unwrap();
    let res = resolve(&m, 4).unwrap();
    assert!(res.is_complex());
    assert!(res.is_minimal());
    // Betti numbers of the maximal ideal of k[x,y]/(x^2,y^2): 2, 3, 4, ...
    assert_eq!(&res.ranks()[..4], &[2, 3, 4, 5]);
}

fn generator() -> impl Strategy<Value = (u32, u32, u32, u32, i64)> {
    (0u32..3, 0u32..3, 0u32..3, 0u32..3, 1i64..5)
}

fn build(r: &QuotientRing<PrimeField>, (a, b, c, d, coef): (u32, u32, u32, u32, i64)) -> Poly<PrimeField> {
    // A binomial of degree a + b + c + 1: x^a y^b z^c w + coef * (same shifted).
    let base = r.base();
    let k = base.field();
    let deg = a + b + c + 1;
    let first = Monomial::from_exponents(&[a + 1, b, c]);
    let e = d.min(deg);
    let second = Monomial::from_exponents(&[0, e, deg - e]);
    base.add(&base.term(first, k.one()), &base.term(second, k.from_i64(coef)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn oracle_syzygies_lie_in_the_presentation(gens in proptest::collection::vec(generator(), 1..4)) {
        let r = ring(3, &["x", "y", "z"], &["x*y", "z^3"]);
        let gens: Vec<_> = gens.into_iter().map(|g| r.reduce(&build(&r, g))).filter(|g| !g.is_zero()).collect();
        prop_assume!(!gens.is_empty());
        agree(&r, &gens, 5);
    }

    #[test]
    fn resolutions_are_complexes(gens in proptest::collection::vec(generator(), 1..3)) {
        let r = ring(5, &["x", "y", "z"], &["x^2", "y*z"]);
        let gens: Vec<_> = gens.into_iter().map(|g| r.reduce(&build(&r, g))).filter(|g| !g.is_zero()).collect();
        prop_assume!(!gens.is_empty());
        let m = present_ideal(&r, &gens).unwrap();
        let res = resolve(&m, 3).unwrap();
        prop_assert!(res.is_complex());
        prop_assert!(res.has_no_unit_entries());
    }
}
