//! Named rings and ideals used by the checks and the acceptance suite.

use std::sync::Arc;

use tracemod::{Field, MonomialOrder, OrderKind, Poly, PolyRing, PrimeField, QuotientRing, Rationals, Result};

/// A ring with a list of ideals given by generators.
#[derive(Clone, Debug)]
pub struct Fixture<F: Field> {
    pub name: &'static str,
    pub ring: Arc<QuotientRing<F>>,
    pub ideals: Vec<Vec<Poly<F>>>,
}

pub fn ring<F: Field>(field: F, vars: &[&str], weights: &[u32], rels: &[&str]) -> Result<Arc<QuotientRing<F>>> {
    let names: Vec<String> = vars.iter().map(|v| v.to_string()).collect();
    let weights = if weights.is_empty() { vec![1; vars.len()] } else { weights.to_vec() };
    let base = PolyRing::with_order(field, names, MonomialOrder::standard(OrderKind::Grevlex, vars.len()), weights)?;
    let rels = rels.iter().map(|s| base.parse(s)).collect::<Result<Vec<_>>>()?;
    Ok(QuotientRing::new(base, &rels)?.into_ref())
}

fn ideals<F: Field>(r: &QuotientRing<F>, lists: &[&[&str]]) -> Result<Vec<Vec<Poly<F>>>> {
    lists.iter().map(|l| l.iter().map(|s| r.parse(s)).collect()).collect()
}

fn prime(p: u64) -> PrimeField {
    PrimeField::new(p).expect("fixture characteristics are prime")
}

/// `F2[x,y]/(x^2, y^2)`, Gorenstein of length 4.
pub fn square() -> Result<Fixture<PrimeField>> {
    Ok(Fixture { name: "square", ring: ring(prime(2), &["x", "y"], &[], &["x^2", "y^2"])?, ideals: Vec::new() })
}

/// `F3[x]/(x^4)`, a chain ring.
pub fn chain() -> Result<Fixture<PrimeField>> {
    Ok(Fixture { name: "chain", ring: ring(prime(3), &["x"], &[], &["x^4"])?, ideals: Vec::new() })
}

/// `F5[x]/(x^2)`, the dual numbers.
pub fn dual_numbers() -> Result<Fixture<PrimeField>> {
    Ok(Fixture { name: "dual-numbers", ring: ring(prime(5), &["x"], &[], &["x^2"])?, ideals: Vec::new() })
}

/// `F3[x,y]/(x^2, y^3)`, Gorenstein of length 6.
pub fn rectangle() -> Result<Fixture<PrimeField>> {
    Ok(Fixture { name: "rectangle", ring: ring(prime(3), &["x", "y"], &[], &["x^2", "y^3"])?, ideals: Vec::new() })
}

/// `F2[x,y]/(x^2, xy, y^2)`, Artinian with a two-dimensional socle.
pub fn fat_point() -> Result<Fixture<PrimeField>> {
    Ok(Fixture { name: "fat-point", ring: ring(prime(2), &["x", "y"], &[], &["x^2", "x*y", "y^2"])?, ideals: Vec::new() })
}

/// The Artinian fixtures: the Gorenstein ones first.
pub fn artinian() -> Result<Vec<Fixture<PrimeField>>> {
    Ok(vec![square()?, chain()?, dual_numbers()?, rectangle()?, fat_point()?])
}

/// `F5[x,y]/(xy)`, the node.
pub fn node() -> Result<Fixture<PrimeField>> {
    let r = ring(prime(5), &["x", "y"], &[], &["x*y"])?;
    let ideals = ideals(&r, &[&["y"], &["x"], &["x", "y"], &["x + y"], &["y^2"], &["x^2", "y"], &["x", "y^2"]])?;
    Ok(Fixture { name: "node", ring: r, ideals })
}

/// `Q[x,y]/(x^2 y^2)`.
pub fn hypersurface() -> Result<Fixture<Rationals>> {
    let r = ring(Rationals, &["x", "y"], &[], &["x^2*y^2"])?;
    let ideals =
        ideals(&r, &[&["x^5", "x*y^7"], &["x"], &["x*y"], &["x + y"], &["x^2", "x*y^2"], &["x", "y"], &["x^2"]])?;
    Ok(Fixture { name: "hypersurface", ring: r, ideals })
}

/// `k[t^3, t^4, t^5]` as `Q[a,b,c]/(b^2 - ac, c^2 - a^2 b, bc - a^3)` with
/// weights 3, 4, 5.
pub fn semigroup() -> Result<Fixture<Rationals>> {
    let r = ring(Rationals, &["a", "b", "c"], &[3, 4, 5], &["b^2 - a*c", "c^2 - a^2*b", "b*c - a^3"])?;
    let ideals = ideals(
        &r,
        &[
            &["0"],
            &["a"],
            &["b"],
            &["c"],
            &["a^2"],
            &["a", "b"],
            &["a", "c"],
            &["b", "c"],
            &["a", "b", "c"],
            &["a^2", "b"],
            &["a^2", "c"],
            &["a^2", "a*b"],
            &["b", "a*c"],
            &["a^2", "b", "c"],
            &["a^2", "a*b", "a*c"],
            &["1"],
        ],
    )?;
    Ok(Fixture { name: "semigroup", ring: r, ideals })
}

/// `Q[x,y]`.
pub fn plane() -> Result<Fixture<Rationals>> {
    let r = ring(Rationals, &["x", "y"], &[], &[])?;
    let ideals = ideals(&r, &[&["x", "y"]])?;
    Ok(Fixture { name: "plane", ring: r, ideals })
}
