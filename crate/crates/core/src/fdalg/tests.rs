use std::sync::Arc;

use proptest::prelude::*;

use super::*;
use crate::arith::{PrimeField, Rationals};
use crate::poly::PolyRing;

fn ring<F: Field>(field: F, vars: &[&str], rels: &[&str]) -> Arc<QuotientRing<F>> {
    let base = PolyRing::new(field, vars).unwrap();
    let rels: Vec<_> = rels.iter().map(|s| base.parse(s).unwrap()).collect();
    QuotientRing::new(base, &rels).unwrap().into_ref()
}

fn f(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

#[test]
fn dimensions_and_rejection() {
    let r = ring(f(2), &["x", "y"], &["x^2", "y^2"]);
    let a = algebraize(&r, DEFAULT_DIMENSION_CAP).unwrap();
    assert_eq!(a.dim(), 4);
    assert!(a.basis()[a.unit_index()].is_one());
    let node = ring(f(5), &["x", "y"], &["x*y"]);
    assert_eq!(algebraize(&node, 64).unwrap_err(), Error::NotArtinian);
    let big = ring(f(3), &["x", "y"], &["x^9", "y^9"]);
    assert_eq!(algebraize(&big, 64).unwrap_err(), Error::DimensionCapExceeded(64));
}

#[test]
fn monomial_ideals_of_truncated_line() {
    let r = ring(f(3), &["x"], &["x^4"]);
    let a = algebraize(&r, 64).unwrap();
    let ideals = enumerate_ideals(&a, IdealSource::Monomial);
    assert_eq!(ideals.len(), 5);
    let dims: Vec<usize> = ideals.iter().map(|i| i.subspace.dim()).collect();
    assert_eq!(dims, vec![0, 4, 3, 2, 1]);
}

#[test]
fn monomial_ideals_of_square() {
    let r = ring(f(2), &["x", "y"], &["x^2", "y^2"]);
    let a = algebraize(&r, 64).unwrap();
    // (0), (xy), (x), (y), (x,y), (1)
    assert_eq!(enumerate_ideals(&a, IdealSource::Monomial).len(), 6);
}

#[test]
fn random_ideals_are_reproducible() {
    let r = ring(f(2), &["x", "y"], &["x^2", "y^2"]);
    let a = algebraize(&r, 64).unwrap();
    let src = IdealSource::Random { seed: 42, count: 10 };
    let one: Vec<_> = enumerate_ideals(&a, src).into_iter().map(|i| i.subspace).collect();
    let two: Vec<_> = enumerate_ideals(&a, src).into_iter().map(|i| i.subspace).collect();
    assert_eq!(one.len(), 10);
    assert_eq!(one, two);
    let m = a.maximal_ideal();
    assert!(one.iter().all(|s| s.dim() > 0 && m.contains_subspace(a.field(), s)));
}

#[test]
fn hom_dimensions() {
    let r = ring(f(2), &["x", "y"], &["x^2", "y^2"]);
    let a = algebraize(&r, 64).unwrap();
    let k = a.field();
    let reg = FDModule::regular(&a);
    let res = FDModule::residue_field(&a);
    assert_eq!(fd_hom(k, &reg, &reg).len(), 4);
    assert_eq!(fd_hom(k, &res, &reg).len(), 1);
    assert_eq!(fd_hom(k, &reg, &res).len(), 1);
    assert_eq!(fd_hom(k, &res, &res).len(), 1);
}

#[test]
fn ext_over_dual_numbers() {
    let r = ring(f(5), &["x"], &["x^2"]);
    let a = algebraize(&r, 64).unwrap();
    let res = FDModule::residue_field(&a);
    let reg = FDModule::regular(&a);
    assert_eq!(fd_ext1(&a, &res, &res), 1);
    assert_eq!(fd_ext1(&a, &reg, &res), 0);
    assert_eq!(fd_ext1(&a, &res, &reg), 0);
    let (omega, mu) = fd_syzygy(&a, &res);
    assert_eq!((omega.dim(), mu), (1, 1));
}

#[test]
fn socle_and_trace() {
    let r = ring(f(3), &["x", "y"], &["x^2", "y^3"]);
    let a = algebraize(&r, 64).unwrap();
    let k = a.field();
    let reg = FDModule::regular(&a);
    let soc = reg.socle(k);
    assert_eq!(soc.dim(), 1);
    assert_eq!(a.poly(&soc.basis()[0]), r.parse("x*y^2").unwrap());
    let res = FDModule::residue_field(&a);
    assert_eq!(fd_trace(k, &res, &reg), soc);
    assert_eq!(fd_trace(k, &reg, &reg).dim(), a.dim());
}

#[test]
fn presentation_conversion() {
    use crate::fpmod::{present_ideal, Matrix};
    let r = ring(f(7), &["x", "y"], &["x^2", "y^2"]);
    let a = algebraize(&r, 64).unwrap();
    let m = present_ideal(&r, &[r.parse("x").unwrap(), r.parse("y").unwrap()]).unwrap();
    let fd = module_from_presentation(&a, &m);
    assert_eq!(fd.dim(), 3);
    assert_eq!(fd.minimal_generators(a.field()), 2);
    let free = PresentedModule::coker(&r, Matrix::zero(2, 0));
    assert_eq!(module_from_presentation(&a, &free), FDModule::free(&a, 2));
}

#[test]
fn cosyzygy_of_residue_field_in_gorenstein_ring() {
    let r = ring(f(3), &["x"], &["x^5"]);
    let a = algebraize(&r, 64).unwrap();
    let res = FDModule::residue_field(&a);
    let co = fd_cosyzygy(&a, &res);
    assert_eq!(co.dim(), 4);
    let back = fd_syzygy(&a, &co).0;
    assert_eq!(back.dim(), 1);
}

#[test]
fn rational_coefficients() {
    let r = ring(Rationals, &["x", "y"], &["x^2", "x*y", "y^2"]);
    let a = algebraize(&r, 64).unwrap();
    let res = FDModule::residue_field(&a);
    assert_eq!(fd_ext1(&a, &res, &res), 2);
    assert_eq!(FDModule::regular(&a).socle(a.field()).dim(), 2);
}

fn elem_strategy(d: usize) -> impl Strategy<Value = Vec<u32>> {
    proptest::collection::vec(0u32..3, d)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn multiplication_is_commutative_and_associative(
        x in elem_strategy(6), y in elem_strategy(6), z in elem_strategy(6)
    ) {
        let r = ring(f(3), &["x", "y"], &["x^2", "y^3"]);
        let a = algebraize(&r, 64).unwrap();
        prop_assert_eq!(a.mul(&x, &y), a.mul(&y, &x));
        prop_assert_eq!(a.mul(&a.mul(&x, &y), &z), a.mul(&x, &a.mul(&y, &z)));
        let px = a.poly(&x);
        let py = a.poly(&y);
        prop_assert_eq!(a.coords(&r.mul(&px, &py)), a.mul(&x, &y));
    }

    #[test]
    fn hom_maps_commute_with_the_action(gens in proptest::collection::vec(elem_strategy(6), 1..3)) {
        let r = ring(f(3), &["x", "y"], &["x^2", "y^3"]);
        let a = algebraize(&r, 64).unwrap();
        let k = a.field();
        let i = a.ideal_span(&gens);
        let m = ideal_module(&a, &i);
        let q = quotient_algebra_module(&a, &i);
        prop_assert_eq!(m.dim() + q.dim(), a.dim());
        for hom in fd_hom(k, &m, &q) {
            for (am, aq) in m.actions().iter().zip(q.actions()) {
                prop_assert_eq!(hom.mul(k, am), aq.mul(k, &hom));
            }
        }
        let (omega, mu) = fd_syzygy(&a, &m);
        prop_assert_eq!(omega.dim() + m.dim(), mu * a.dim());
    }
}
