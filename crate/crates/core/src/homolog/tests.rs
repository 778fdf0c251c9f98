use std::sync::Arc;

use super::*;
use crate::arith::{PrimeField, Rationals};
use crate::poly::PolyRing;

fn ring<F: Field>(field: F, vars: &[&str], rels: &[&str]) -> Arc<QuotientRing<F>> {
    let base = PolyRing::new(field, vars).unwrap();
    let rels: Vec<_> = rels.iter().map(|s| base.parse(s).unwrap()).collect();
    QuotientRing::new(base, &rels).unwrap().into_ref()
}

fn polys<F: Field>(r: &QuotientRing<F>, texts: &[&str]) -> Vec<Poly<F>> {
    texts.iter().map(|s| r.parse(s).unwrap()).collect()
}

fn ideal<F: Field>(r: &Arc<QuotientRing<F>>, texts: &[&str]) -> PresentedModule<F> {
    present_ideal(r, &polys(r, texts)).unwrap()
}

fn quotient<F: Field>(r: &Arc<QuotientRing<F>>, texts: &[&str]) -> PresentedModule<F> {
    PresentedModule::cyclic_quotient(r, &polys(r, texts))
}

fn node() -> Arc<QuotientRing<PrimeField>> {
    ring(PrimeField::new(5).unwrap(), &["x", "y"], &["x*y"])
}

#[test]
fn trace_of_grade_zero_ideal() {
    let r = ring(Rationals, &["x", "y"], &["x^2*y^2"]);
    let i = ideal(&r, &["x^5", "x*y^7"]);
    let expected = Ideal::parse(&r, &["x^2", "x*y^2"]).unwrap();
    for method in [TraceMethod::HomImages, TraceMethod::LeftKernel] {
        let t = trace_ideal(&i, method).unwrap();
        assert!(t.ideal().unwrap().equals(&expected).unwrap(), "{method:?}");
        assert!(t.proper);
        assert_eq!(t.ideal().unwrap().render(), vec!["x^2", "x*y^2"]);
    }
    let gens = Ideal::parse(&r, &["x^5", "x*y^7"]).unwrap();
    assert_eq!(grade(&gens), Ok(0));
    assert!(!is_trace_module(&Submodule::ideal(&r, &polys(&r, &["x^5", "x*y^7"]))).unwrap());
}

#[test]
fn node_principal_branch() {
    let r = node();
    let i = ideal(&r, &["y"]);
    let hom = hom_module(&i, &quotient(&r, &["y"])).unwrap();
    assert!(hom.is_zero().unwrap());
    let t = trace_ideal(&i, TraceMethod::HomImages).unwrap();
    assert!(t.ideal().unwrap().equals(&Ideal::parse(&r, &["y"]).unwrap()).unwrap());
    let v = rigidity(&i).unwrap();
    assert!(v.rigid && !v.free);
    assert_eq!(v.ext1_dim, Some(0));
    let ann = annihilator(&i).unwrap();
    assert!(ann.equals(&Ideal::parse(&r, &["x"]).unwrap()).unwrap());
    assert!(is_trace_module(&Submodule::ideal(&r, &polys(&r, &["y"]))).unwrap());
    let cd = conormal_dual(&Ideal::parse(&r, &["y"]).unwrap()).unwrap();
    assert!(cd.vanishes && cd.adjunction_agrees);
    assert!(contains_regular_element(&ann, &quotient(&r, &["y"])).unwrap());
}

#[test]
fn node_maximal_ideal() {
    let r = node();
    let j = ideal(&r, &["x", "y"]);
    assert!(!hom_module(&j, &quotient(&r, &["x", "y"])).unwrap().is_zero().unwrap());
    let t = trace_ideal(&j, TraceMethod::LeftKernel).unwrap();
    assert!(t.ideal().unwrap().equals(&Ideal::parse(&r, &["x", "y"]).unwrap()).unwrap());
    let v = rigidity(&j).unwrap();
    assert!(!v.rigid && !v.free);
    assert!(!ext(1, &j, &j).unwrap().is_zero().unwrap());
    let cd = conormal_dual(&Ideal::parse(&r, &["x", "y"]).unwrap()).unwrap();
    assert!(!cd.vanishes && cd.adjunction_agrees);
}

#[test]
fn free_ideal_has_full_trace() {
    let r = ring(Rationals, &["x", "y"], &["x^2*y^2"]);
    let i = ideal(&r, &["x + y"]);
    let t = trace_in(&i, &PresentedModule::free(&r, 1)).unwrap();
    assert!(!t.proper);
    assert!(t.ideal().unwrap().is_unit());
    assert!(i.is_free().unwrap());
}

#[test]
fn hom_examples() {
    let r = ring(PrimeField::new(2).unwrap(), &["x", "y"], &["x^2", "y^2"]);
    let m = ideal(&r, &["x", "y"]);
    let k = quotient(&r, &["x", "y"]);
    let hom = hom_module(&m, &k).unwrap();
    assert_eq!(hom.vector_dimension(), Ok(Some(2)));
    assert!(hom.lifts_well_defined(&m, &k).unwrap());

    let hom_r = hom_module(&PresentedModule::free(&r, 1), &m).unwrap();
    assert_eq!(hom_r.carrier.minimal_generators(), m.minimal_generators());

    assert_eq!(dual(&k).unwrap().vector_dimension(), Ok(Some(1)));
    assert_eq!(dual(&m).unwrap().vector_dimension(), Ok(Some(3)));
}

#[test]
fn ext_examples() {
    let r = ring(PrimeField::new(3).unwrap(), &["x"], &["x^3"]);
    let e = ext(1, &quotient(&r, &["x^2"]), &PresentedModule::free(&r, 1)).unwrap();
    assert!(e.is_zero().unwrap());

    let r = ring(PrimeField::new(5).unwrap(), &["x"], &["x^2"]);
    let k = quotient(&r, &["x"]);
    assert_eq!(ext(1, &k, &k).unwrap().vector_dimension(), Ok(Some(1)));
    let all = ext_range(3, &k, &k).unwrap();
    assert!(all.iter().all(|e| e.vector_dimension() == Ok(Some(1))));
}

#[test]
fn ext_zero_is_hom() {
    let r = ring(PrimeField::new(2).unwrap(), &["x", "y"], &["x^2", "y^2"]);
    let m = ideal(&r, &["x", "y"]);
    let n = ideal(&r, &["x"]);
    assert_eq!(ext(0, &m, &n).unwrap().vector_dimension(), hom_module(&m, &n).unwrap().vector_dimension());
}

#[test]
fn residue_trace_is_socle() {
    let r = ring(PrimeField::new(5).unwrap(), &["x"], &["x^2"]);
    let t = trace_in(&quotient(&r, &["x"]), &PresentedModule::free(&r, 1)).unwrap();
    assert!(t.proper);
    assert!(t.ideal().unwrap().equals(&Ideal::parse(&r, &["x"]).unwrap()).unwrap());

    let x = ideal(&r, &["x"]);
    let whole = Submodule::whole(&x);
    assert!(is_trace_module(&whole).unwrap());
}

#[test]
fn annihilators() {
    let r = ring(PrimeField::new(2).unwrap(), &["x", "y"], &["x^2", "y^2"]);
    assert!(annihilator(&PresentedModule::free(&r, 1)).unwrap().is_zero());
    let k = quotient(&r, &["x", "y"]);
    assert!(annihilator(&k).unwrap().equals(&Ideal::parse(&r, &["x", "y"]).unwrap()).unwrap());
    let sum = PresentedModule::free(&r, 1).direct_sum(&k).unwrap();
    assert!(annihilator(&sum).unwrap().is_zero());
}

#[test]
fn socles() {
    let r = ring(PrimeField::new(5).unwrap(), &["x"], &["x^2"]);
    let s = socle(&PresentedModule::free(&r, 1)).unwrap();
    assert!(s.as_ideal().unwrap().equals(&Ideal::parse(&r, &["x"]).unwrap()).unwrap());

    let r = ring(PrimeField::new(2).unwrap(), &["x", "y"], &["x^2", "y^2"]);
    let s = socle(&PresentedModule::free(&r, 1)).unwrap();
    assert_eq!(s.vector_dimension(), Ok(Some(1)));
    assert!(s.as_ideal().unwrap().equals(&Ideal::parse(&r, &["x*y"]).unwrap()).unwrap());

    let k = quotient(&r, &["x", "y"]);
    assert!(socle(&k).unwrap().is_everything().unwrap());
}

#[test]
fn grades() {
    let r = ring(Rationals, &["x", "y"], &[]);
    assert_eq!(grade(&Ideal::parse(&r, &["x", "y"]).unwrap()), Ok(2));
    assert_eq!(grade(&Ideal::parse(&r, &["x"]).unwrap()), Ok(1));
    let r = ring(PrimeField::new(2).unwrap(), &["x", "y"], &["x^2", "y^2"]);
    for gens in [&["x"][..], &["x*y"], &["x", "y"], &["x + y"]] {
        assert_eq!(grade(&Ideal::parse(&r, gens).unwrap()), Ok(0));
    }
    assert!(grade(&Ideal::parse(&r, &["1"]).unwrap()).is_err());
    assert!(grade(&Ideal::parse(&r, &["0"]).unwrap()).is_err());
}

#[test]
fn conormal_of_dual_numbers() {
    let r = ring(PrimeField::new(5).unwrap(), &["x"], &["x^2"]);
    let cd = conormal_dual(&Ideal::parse(&r, &["x"]).unwrap()).unwrap();
    assert!(!cd.vanishes);
    assert_eq!(cd.dimension, Some(1));
    assert!(cd.adjunction_agrees);
}

#[test]
fn gorenstein_detection() {
    assert!(is_artinian_gorenstein(&ring(PrimeField::new(2).unwrap(), &["x", "y"], &["x^2", "y^2"])).unwrap());
    assert!(is_artinian_gorenstein(&ring(PrimeField::new(3).unwrap(), &["x"], &["x^4"])).unwrap());
    assert!(!is_artinian_gorenstein(&ring(PrimeField::new(2).unwrap(), &["x", "y"], &["x^2", "x*y", "y^2"])).unwrap());
    assert!(!is_artinian_gorenstein(&node()).unwrap());
}

#[test]
fn cosyzygies_in_truncated_line() {
    let n = 5;
    let r = ring(PrimeField::new(3).unwrap(), &["x"], &["x^5"]);
    for a in 1..n {
        // (x^b)* ≅ (x^{n-b}), Ω^1 (x^b) ≅ (x^{n-b}), so Ω^{-1} (x^{n-a}) ≅ (x^a)
        let m = ideal(&r, &[&format!("x^{}", n - a)]);
        let c = cosyzygy(&m, 1).unwrap();
        assert_eq!(c.num_generators(), 1);
        assert!(annihilator(&c).unwrap().equals(&Ideal::parse(&r, &[&format!("x^{}", n - a)]).unwrap()).unwrap());
    }
    assert!(cosyzygy(&PresentedModule::free(&r, 1), 1).unwrap().is_zero().unwrap());
}

#[test]
fn cosyzygy_round_trip_betti() {
    let r = ring(PrimeField::new(2).unwrap(), &["x", "y"], &["x^2", "y^2"]);
    let m = ideal(&r, &["x", "y"]);
    let back = syzygy(&cosyzygy(&m, 1).unwrap(), 1).unwrap();
    let ranks = |p: &PresentedModule<PrimeField>| crate::fpmod::resolve(p, 3).unwrap().ranks().to_vec();
    assert_eq!(ranks(&back), ranks(&m));
    assert_eq!(cosyzygy(&m, 1).map(|_| ()), Ok(()));
    assert_eq!(cosyzygy(&ideal(&node(), &["x"]), 1).unwrap_err(), Error::NotGorenstein);
}

#[test]
fn rigidity_in_complete_intersection() {
    let r = ring(PrimeField::new(2).unwrap(), &["x", "y"], &["x^2", "y^2"]);
    let v = rigidity(&ideal(&r, &["x"])).unwrap();
    assert!(!v.rigid && !v.free);
    assert!(v.ext1_dim.unwrap() > 0);
    let v = rigidity(&PresentedModule::free(&r, 2)).unwrap();
    assert!(v.rigid && v.free);
}

#[test]
fn submodule_trace_tests_agree() {
    let r = ring(PrimeField::new(2).unwrap(), &["x", "y"], &["x^2", "y^2"]);
    let free2 = PresentedModule::free(&r, 2);
    let m = Submodule::new(&free2, vec![polys(&r, &["x", "y"])]).unwrap();
    let t = trace_module_test(&m).unwrap();
    assert!(t.consistent());
    let soc = socle(&free2).unwrap();
    assert!(is_trace_module(&soc).unwrap());
}
