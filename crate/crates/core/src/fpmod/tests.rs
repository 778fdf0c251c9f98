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

fn polys<F: Field>(r: &QuotientRing<F>, texts: &[&str]) -> Vec<Poly<F>> {
    texts.iter().map(|s| r.parse(s).unwrap()).collect()
}

fn matrix<F: Field>(r: &QuotientRing<F>, rows: &[&[&str]]) -> Matrix<F> {
    Matrix::from_rows(rows.iter().map(|row| polys(r, row)).collect())
}

fn same_span<F: Field>(r: &QuotientRing<F>, a: &Matrix<F>, b: &Matrix<F>) -> bool {
    column_span_gb(r, a).unwrap() == column_span_gb(r, b).unwrap()
}

#[test]
fn ideal_presentation_over_node() {
    let r = ring(Rationals, &["x", "y"], &["x*y"]);
    let m = present_ideal(&r, &polys(&r, &["x", "y"])).unwrap();
    assert!(same_span(&r, m.presentation(), &matrix(&r, &[&["y", "0"], &["0", "x"]])));
    assert_eq!(m.degrees(), Some(&[1, 1][..]));
    assert_eq!(m.ideal_generators().unwrap().len(), 2);
}

#[test]
fn principal_ideal_in_truncated_line() {
    for (a, n) in [(1, 3), (2, 5), (3, 4)] {
        let r = ring(PrimeField::new(3).unwrap(), &["x"], &[&format!("x^{n}")]);
        let m = present_ideal(&r, &polys(&r, &[&format!("x^{a}")])).unwrap();
        let expected = matrix(&r, &[&[&format!("x^{}", n - a)]]);
        assert!(same_span(&r, m.presentation(), &expected));
    }
}

#[test]
fn syzygy_examples() {
    let r = ring(Rationals, &["x"], &["x^2"]);
    let s = syzygy_matrix(&r, &matrix(&r, &[&["x"]])).unwrap();
    assert!(same_span(&r, &s, &matrix(&r, &[&["x"]])));

    let r = ring(Rationals, &["x", "y"], &[]);
    let a = matrix(&r, &[&["x", "y"]]);
    let s = syzygy_matrix(&r, &a).unwrap();
    assert!(same_span(&r, &s, &matrix(&r, &[&["y"], &["-x"]])));
    assert!(a.mul(&r, &s).is_zero());

    let r = ring(Rationals, &["x", "y"], &["x*y"]);
    let s = syzygy_matrix(&r, &matrix(&r, &[&["x", "y"]])).unwrap();
    assert!(same_span(&r, &s, &matrix(&r, &[&["y", "0"], &["0", "x"]])));
}

#[test]
fn residue_field_of_dual_numbers_is_periodic() {
    let r = ring(PrimeField::new(5).unwrap(), &["x"], &["x^2"]);
    let k = PresentedModule::cyclic_quotient(&r, &polys(&r, &["x"]));
    let res = resolve(&k, 3).unwrap();
    assert_eq!(res.ranks(), &[1, 1, 1, 1]);
    for d in res.differentials() {
        assert_eq!(d, &matrix(&r, &[&["x"]]));
    }
    assert!(res.is_complex());
    assert!(res.is_minimal());
}

#[test]
fn free_module_has_empty_resolution() {
    let r = ring(Rationals, &["x", "y"], &["x*y"]);
    let res = resolve(&PresentedModule::free(&r, 1), 4).unwrap();
    assert!(res.differentials().is_empty());
    assert_eq!(res.ranks(), &[1]);
    assert!(res.terminated());
}

#[test]
fn maximal_ideal_of_node() {
    let r = ring(Rationals, &["x", "y"], &["x*y"]);
    let m = present_ideal(&r, &polys(&r, &["x", "y"])).unwrap();
    let res = resolve(&m, 2).unwrap();
    assert_eq!(res.ranks(), &[2, 2, 2]);
    assert!(res.is_complex());
    assert!(res.has_no_unit_entries());
    assert_eq!(res.graded_betti().unwrap(), &[vec![1, 1], vec![2, 2], vec![3, 3]]);
    let omega = syzygy(&m, 1).unwrap();
    assert_eq!(omega.num_generators(), 2);
    assert_eq!(omega.presentation(), res.differentials().get(1).unwrap());
}

#[test]
fn first_syzygy_of_principal_ideal() {
    let r = ring(PrimeField::new(3).unwrap(), &["x"], &["x^5"]);
    let m = present_ideal(&r, &polys(&r, &["x^2"])).unwrap();
    let omega = syzygy(&m, 1).unwrap();
    assert_eq!(omega.num_generators(), 1);
    assert!(same_span(&r, omega.presentation(), &matrix(&r, &[&["x^2"]])));
    let zeroth = syzygy(&m, 0).unwrap();
    assert!(same_span(&r, zeroth.presentation(), m.presentation()));
}

#[test]
fn minimal_generator_counts() {
    let r = ring(Rationals, &["x", "y"], &["x*y"]);
    assert_eq!(present_ideal(&r, &polys(&r, &["x", "y"])).unwrap().minimal_generators(), Ok(2));
    assert_eq!(PresentedModule::free(&r, 1).minimal_generators(), Ok(1));
    let redundant = present_ideal(&r, &polys(&r, &["x", "y", "x + y", "x^2"])).unwrap();
    assert_eq!(redundant.minimal_generators(), Ok(2));

    let s = ring(Rationals, &["x", "y"], &["x^2*y^2"]);
    assert_eq!(present_ideal(&s, &polys(&s, &["x^2", "x*y^2"])).unwrap().minimal_generators(), Ok(2));
}

#[test]
fn freeness() {
    let r = ring(Rationals, &["x", "y"], &["x*y"]);
    assert_eq!(present_ideal(&r, &polys(&r, &["y"])).unwrap().is_free(), Ok(false));
    assert_eq!(PresentedModule::free(&r, 2).is_free(), Ok(true));
    let s = ring(Rationals, &["x", "y"], &["x^2*y^2"]);
    assert_eq!(present_ideal(&s, &polys(&s, &["x + y"])).unwrap().is_free(), Ok(true));
}

#[test]
fn ungraded_input_is_rejected() {
    let r = ring(Rationals, &["x", "y"], &[]);
    let m = present_ideal(&r, &polys(&r, &["x + y^2", "y^3"])).unwrap();
    assert!(m.degrees().is_none());
    assert_eq!(resolve(&m, 2).unwrap_err(), Error::NotGraded);
    assert_eq!(syzygy(&m, 1).unwrap_err(), Error::NotGraded);
}

#[test]
fn local_artinian_units_are_pruned() {
    let r = ring(PrimeField::new(7).unwrap(), &["x", "y"], &["x^2", "y^2"]);
    let m = PresentedModule::coker(&r, matrix(&r, &[&["1 + x", "y"], &["y", "0"]]));
    let p = m.pruned();
    assert_eq!(p.num_generators(), 1);
    assert!(p.presentation().columns().iter().flatten().all(|e| !r.is_unit(e)));
    assert_eq!(m.vector_dimension(), p.vector_dimension());
}

#[test]
fn zero_and_dimension() {
    let r = ring(PrimeField::new(2).unwrap(), &["x", "y"], &["x^2", "y^2"]);
    assert_eq!(PresentedModule::free(&r, 2).vector_dimension(), Ok(Some(8)));
    let unit = PresentedModule::cyclic_quotient(&r, &polys(&r, &["1"]));
    assert_eq!(unit.is_zero(), Ok(true));
    assert_eq!(PresentedModule::free(&r, 0).is_zero(), Ok(true));
    let node = ring(Rationals, &["x", "y"], &["x*y"]);
    assert_eq!(PresentedModule::free(&node, 1).vector_dimension(), Ok(None));
}

#[test]
fn submodule_operations() {
    let r = ring(PrimeField::new(2).unwrap(), &["x", "y"], &["x^2", "y^2"]);
    let free2 = PresentedModule::free(&r, 2);
    let u = Submodule::new(&free2, vec![polys(&r, &["x", "y"]), polys(&r, &["y", "0"])]).unwrap();
    let v = Submodule::new(&free2, vec![polys(&r, &["x", "0"]), polys(&r, &["y", "0"]), polys(&r, &["0", "y"])]).unwrap();
    assert_eq!(v.contains(&u), Ok(true));
    assert_eq!(u.contains(&v), Ok(false));
    assert_eq!(u.vector_dimension(), Ok(Some(4)));
    let q = u.quotient();
    assert_eq!(q.vector_dimension(), Ok(Some(4)));
    let p = u.present().unwrap();
    assert_eq!(p.vector_dimension(), Ok(Some(4)));

    let ideal = Submodule::ideal(&r, &polys(&r, &["x", "x*y"]));
    assert_eq!(ideal.as_ideal().unwrap().render(), vec!["x"]);
    assert!(matches!(ideal.present().unwrap().embedding(), Embedding::Ideal(_)));
}

fn monomial_strategy() -> impl Strategy<Value = Vec<(u32, u32)>> {
    proptest::collection::vec((0u32..3, 0u32..4), 1..4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn resolutions_are_minimal_complexes(mons in monomial_strategy()) {
        let r = ring(PrimeField::new(3).unwrap(), &["x", "y"], &["x^3", "y^4"]);
        let gens: Vec<_> = mons.iter().map(|(a, b)| r.parse(&format!("x^{a}*y^{b}")).unwrap()).collect();
        let m = present_ideal(&r, &gens).unwrap();
        let row = Matrix::from_rows(vec![m.ideal_generators().unwrap().to_vec()]);
        prop_assert!(row.mul(&r, m.presentation()).is_zero());
        let res = resolve(&m, 3).unwrap();
        prop_assert!(res.is_complex());
        prop_assert!(res.has_no_unit_entries());
        for k in 1..res.ranks().len() {
            prop_assert_eq!(syzygy(&m, k).unwrap().minimal_generators().unwrap(), res.rank(k));
        }
    }

    #[test]
    fn pruning_preserves_the_module(
        entries in proptest::collection::vec(proptest::collection::vec((0i64..3, 0u32..2, 0u32..2), 0..3), 4)
    ) {
        let r = ring(PrimeField::new(3).unwrap(), &["x", "y"], &["x^2", "y^2"]);
        let rows: Vec<Vec<Poly<PrimeField>>> = entries
            .chunks(2)
            .map(|row| row.iter().map(|terms| {
                let text: Vec<String> = terms.iter().map(|(c, a, b)| format!("{c}*x^{a}*y^{b}")).collect();
                let text = if text.is_empty() { "0".to_string() } else { text.join(" + ") };
                r.parse(&text).unwrap()
            }).collect())
            .collect();
        let m = PresentedModule::coker(&r, Matrix::from_rows(rows));
        let (p, kept) = m.prune();
        prop_assert_eq!(p.num_generators(), kept.len());
        prop_assert_eq!(m.vector_dimension().unwrap(), p.vector_dimension().unwrap());
        prop_assert!(p.presentation().columns().iter().flatten().all(|e| !r.is_unit(e)));
    }
}
