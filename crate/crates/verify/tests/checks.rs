use tracemod::{Error, Ideal, PrimeField};
use tracemod_verify::fixtures;
use tracemod_verify::*;

fn report<F: tracemod::Field>(spec: CheckSpec<F>) -> Report {
    let r = run_check(&spec).unwrap();
    assert!(r.counterexamples.is_empty() == (r.verdict != Verdict::Fail));
    r
}

fn lines<F: tracemod::Field>(f: &fixtures::Fixture<F>, gens: &[&[&str]]) -> Vec<Vec<tracemod::Poly<F>>> {
    gens.iter().map(|g| g.iter().map(|s| f.ring.parse(s).unwrap()).collect()).collect()
}

#[test]
fn catalog_names_resolve() {
    for (name, id) in CATALOG {
        assert_eq!(CheckId::parse(name), Some(*id));
    }
    assert_eq!(CheckId::parse("thm-3.9"), Some(CheckId::SyzygyRigidity));
    assert_eq!(CheckId::SyzygyRigidity.name(), "syzygy-rigidity");
    assert_eq!(CheckId::parse("no-such-check"), None);
}

#[test]
fn node_pairs_satisfy_the_trace_lemmas() {
    let f = fixtures::node().unwrap();
    for gens in [&["y"][..], &["x", "y"][..]] {
        let spec = CheckSpec::new(CheckId::TraceLemmas, Some(f.ring.clone()))
            .with_ideals(lines(&f, &[gens]))
            .with_bounds(Bounds { ambients: Ambients::Ring, ..Bounds::default() });
        let r = report(spec);
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.instances_tested, 1);
        assert_eq!(r.summary["trace_modules"], 1);
    }
}

#[test]
fn monomial_census_counts_every_ideal() {
    let f = fixtures::square().unwrap();
    let a = tracemod::fdalg::algebraize(&f.ring, 64).unwrap();
    let count = tracemod::fdalg::enumerate_ideals(&a, tracemod::fdalg::IdealSource::Monomial).len();
    let spec = CheckSpec::new(CheckId::TraceLemmas, Some(f.ring.clone()))
        .with_bounds(Bounds { ambients: Ambients::Ring, ..Bounds::default() });
    let r = report(spec);
    assert_eq!(r.verdict, Verdict::Pass);
    assert_eq!(r.instances_tested, count);
}

#[test]
fn chain_ring_ideals_are_all_trace_ideals() {
    let f = fixtures::chain().unwrap();
    let r = report(CheckSpec::new(CheckId::ExtVanishingTrace, Some(f.ring.clone())));
    assert_eq!(r.verdict, Verdict::Pass);
    assert_eq!(r.instances_tested, 5);
    assert_eq!(r.summary["trace_ideals"], 5);
    assert_eq!(r.summary["ext_vanishes"], 5);
}

#[test]
fn grade_two_and_grade_zero_instances() {
    let f = fixtures::plane().unwrap();
    let r = report(CheckSpec::new(CheckId::ExtVanishingTrace, Some(f.ring.clone())).with_ideals(f.ideals.clone()));
    assert_eq!(r.verdict, Verdict::Pass);
    assert_eq!(r.summary["trace_ideals"], 1);

    let f = fixtures::hypersurface().unwrap();
    let ideals = lines(&f, &[&["x^5", "x*y^7"]]);
    let r = report(CheckSpec::new(CheckId::ExtVanishingTrace, Some(f.ring.clone())).with_ideals(ideals));
    assert_eq!(r.verdict, Verdict::Pass);
    assert_eq!(r.summary["consistent_non_instances"], 1);
}

#[test]
fn non_gorenstein_fixture_has_a_non_trace_ideal() {
    let f = fixtures::fat_point().unwrap();
    let r = report(CheckSpec::new(CheckId::ExtVanishingTrace, Some(f.ring.clone())));
    assert_eq!(r.verdict, Verdict::Pass);
    assert!(r.summary["non_trace_ideals"].as_u64().unwrap() >= 1);
    assert_eq!(r.summary["gorenstein"], false);
}

#[test]
fn rigidity_census_over_gorenstein_fixtures() {
    let f = fixtures::square().unwrap();
    let spec = CheckSpec::new(CheckId::SyzygyRigidity, Some(f.ring.clone()))
        .with_bounds(Bounds { window: (0, 1), ..Bounds::default() });
    let r = report(spec);
    assert_eq!(r.verdict, Verdict::Pass);
    assert!(r.engine_disagreements.is_empty());
    // (xy), (x), (y), (x,y), each at n = 0, 1.
    assert_eq!(r.instances_tested, 8);
    assert!(r.skipped.iter().any(|s| s.reason == "ideal is not proper"));

    let f = fixtures::chain().unwrap();
    let spec = CheckSpec::new(CheckId::SyzygyRigidity, Some(f.ring.clone()))
        .with_bounds(Bounds { window: (-1, 1), ..Bounds::default() });
    let r = report(spec);
    assert_eq!(r.verdict, Verdict::Pass);
    assert_eq!(r.instances_tested, 9);
}

#[test]
fn gorenstein_checks_reject_other_rings() {
    let f = fixtures::fat_point().unwrap();
    for id in [CheckId::SyzygyRigidity, CheckId::BoundedArc] {
        assert_eq!(run_check(&CheckSpec::new(id, Some(f.ring.clone()))).unwrap_err(), Error::NotGorenstein);
    }
    let f = fixtures::node().unwrap();
    assert_eq!(run_check(&CheckSpec::new(CheckId::SyzygyRigidity, Some(f.ring.clone()))).unwrap_err(), Error::NotArtinian);
}

#[test]
fn bounded_arc_over_the_chain_ring() {
    let f = fixtures::chain().unwrap();
    let r = report(CheckSpec::new(CheckId::BoundedArc, Some(f.ring.clone())));
    assert_eq!(r.verdict, Verdict::Pass);
    assert_eq!(r.summary["rigid_free"], 1);
    assert_eq!(r.summary["first_nonvanishing_ext_1"], 3);

    let ideal = Ideal::parse(&f.ring, &["x^2"]).unwrap();
    let m = tracemod::fpmod::present_ideal(&f.ring, ideal.generators()).unwrap();
    assert!(!tracemod::homolog::rigidity(&m).unwrap().rigid);
}

#[test]
fn oracle_agrees_on_small_fixtures() {
    for f in [fixtures::dual_numbers().unwrap(), fixtures::fat_point().unwrap()] {
        let r = report(CheckSpec::new(CheckId::OracleAgreement, Some(f.ring.clone())));
        assert!(r.engine_disagreements.is_empty(), "{}", r.render_text());
        assert!(r.instances_tested > 0);
    }
}

#[test]
fn example_fixtures_pass() {
    let r = report(CheckSpec::<PrimeField>::new(CheckId::ExampleFixtures, None));
    assert_eq!(r.verdict, Verdict::Pass, "{}", r.render_text());
    let sampled: u64 = ["0", "m", "R"]
        .iter()
        .map(|l| r.summary.get(&format!("semigroup_trace_{l}")).and_then(|v| v.as_u64()).unwrap_or(0))
        .sum();
    assert!(sampled >= 12);
}

#[test]
fn reports_are_deterministic_across_runs_and_workers() {
    let f = fixtures::square().unwrap();
    let spec = CheckSpec::new(CheckId::TraceLemmas, Some(f.ring.clone()))
        .with_seed(7)
        .with_bounds(Bounds { random_count: 15, ..Bounds::default() });
    let one = run_check(&spec).unwrap().to_json_untimed();
    let two = run_check(&spec).unwrap().to_json_untimed();
    let parallel = run_check(&spec.clone().with_jobs(4)).unwrap().to_json_untimed();
    assert_eq!(one, two);
    assert_eq!(one, parallel);
}

#[test]
fn invalid_bounds_and_missing_rings() {
    let f = fixtures::square().unwrap();
    let spec = CheckSpec::new(CheckId::BoundedArc, Some(f.ring.clone())).with_bounds(Bounds { ext_bound: 0, ..Bounds::default() });
    assert!(matches!(run_check(&spec), Err(Error::InvalidInput(_))));
    assert!(matches!(run_check(&CheckSpec::<PrimeField>::new(CheckId::TraceLemmas, None)), Err(Error::InvalidInput(_))));
    let spec = CheckSpec::new(CheckId::TraceLemmas, Some(f.ring.clone())).with_bounds(Bounds { dim_cap: 3, ..Bounds::default() });
    assert_eq!(run_check(&spec).unwrap_err(), Error::DimensionCapExceeded(3));
}
