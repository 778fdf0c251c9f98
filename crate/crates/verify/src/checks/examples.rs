//! Golden assertions on named fixtures.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde_json::Value;

use tracemod::fpmod::{present_ideal, PresentedModule, Submodule};
use tracemod::homolog::{annihilator, grade, hom_module, is_trace_module, rigidity, trace_ideal, TraceMethod};
use tracemod::{Field, Ideal, QuotientRing, Result};

use crate::fixtures;
use crate::report::{Counterexample, Tally};

struct Assertion {
    ring: String,
    generators: Vec<String>,
    claim: &'static str,
    holds: bool,
    measured: Vec<(&'static str, Value)>,
}

fn ideal<F: Field>(r: &Arc<QuotientRing<F>>, gens: &[&str]) -> Result<Ideal<F>> {
    Ideal::parse(r, gens)
}

fn record(t: &mut Tally, a: Assertion) {
    t.tested += 1;
    if !a.holds {
        t.counterexamples.push(Counterexample {
            ring: a.ring,
            generators: a.generators,
            instance: a.claim.to_string(),
            measured: a.measured.into_iter().map(|(k, v)| (k.to_string(), v)).collect::<BTreeMap<_, _>>(),
        });
    }
}

/// Properties of one ideal used by several assertions.
struct Profile {
    trace: Vec<String>,
    is_trace: bool,
    rigid: bool,
    free: bool,
    hom_to_quotient_zero: bool,
}

fn profile<F: Field>(i: &Ideal<F>) -> Result<Profile> {
    let r = i.ring();
    let m = present_ideal(r, i.generators())?;
    let trace = trace_ideal(&m, TraceMethod::HomImages)?.ideal()?;
    let is_trace = is_trace_module(&Submodule::ideal(r, i.generators()))?;
    let v = rigidity(&m)?;
    let hom = hom_module(&m, &PresentedModule::cyclic_quotient(r, i.generators()))?;
    Ok(Profile { trace: trace.render(), is_trace, rigid: v.rigid, free: v.free, hom_to_quotient_zero: hom.is_zero()? })
}

fn hypersurface_example(t: &mut Tally) -> Result<()> {
    let f = fixtures::hypersurface()?;
    let r = &f.ring;
    let name = r.display().to_string();
    let i = ideal(r, &["x^5", "x*y^7"])?;
    let expected = ideal(r, &["x^2", "x*y^2"])?;
    let m = present_ideal(r, i.generators())?;
    for (claim, method) in [
        ("trace by hom images is (x^2, x*y^2)", TraceMethod::HomImages),
        ("trace by left kernel is (x^2, x*y^2)", TraceMethod::LeftKernel),
    ] {
        let result = trace_ideal(&m, method)?;
        let trace = result.ideal()?;
        record(
            t,
            Assertion {
                ring: name.clone(),
                generators: i.render(),
                claim,
                holds: trace.equals(&expected)? && result.proper,
                measured: vec![("trace", Value::from(trace.render())), ("proper", Value::from(result.proper))],
            },
        );
    }
    let g = grade(&i)?;
    record(t, Assertion { ring: name.clone(), generators: i.render(), claim: "grade 0", holds: g == 0, measured: vec![("grade", Value::from(g))] });
    let e = tracemod::homolog::ext(1, &PresentedModule::cyclic_quotient(r, i.generators()), &PresentedModule::free(r, 1))?;
    let ext_zero = e.is_zero()?;
    let is_trace = is_trace_module(&Submodule::ideal(r, i.generators()))?;
    record(
        t,
        Assertion {
            ring: name.clone(),
            generators: i.render(),
            claim: "Ext^1(R/I,R) != 0 and I is not a trace ideal",
            holds: !ext_zero && !is_trace,
            measured: vec![("ext_vanishes", Value::from(ext_zero)), ("trace_ideal", Value::from(is_trace))],
        },
    );
    for gens in [&["x"][..], &["x*y"][..]] {
        let i = ideal(r, gens)?;
        let g = grade(&i)?;
        let v = rigidity(&present_ideal(r, i.generators())?)?;
        record(
            t,
            Assertion {
                ring: name.clone(),
                generators: i.render(),
                claim: "grade 0 ideal meeting its support is not rigid",
                holds: g == 0 && !v.rigid,
                measured: vec![("grade", Value::from(g)), ("rigid", Value::from(v.rigid))],
            },
        );
    }
    let i = ideal(r, &["x + y"])?;
    let p = profile(&i)?;
    record(
        t,
        Assertion {
            ring: name,
            generators: i.render(),
            claim: "free proper ideal has trace R",
            holds: p.trace == vec!["1"] && p.free,
            measured: vec![("trace", Value::from(p.trace)), ("free", Value::from(p.free))],
        },
    );
    Ok(())
}

fn node_example(t: &mut Tally) -> Result<()> {
    let f = fixtures::node()?;
    let r = &f.ring;
    let name = r.display().to_string();

    let i = ideal(r, &["y"])?;
    let p = profile(&i)?;
    let ann = annihilator(&present_ideal(r, i.generators())?)?;
    let ann_ok = ann.equals(&ideal(r, &["x"])?)?;
    record(
        t,
        Assertion {
            ring: name.clone(),
            generators: i.render(),
            claim: "(y) is a rigid non-free trace ideal with Hom(I,R/I) = 0 and Ann I = (x)",
            holds: p.is_trace && p.rigid && !p.free && p.hom_to_quotient_zero && ann_ok,
            measured: vec![
                ("trace_ideal", Value::from(p.is_trace)),
                ("rigid", Value::from(p.rigid)),
                ("free", Value::from(p.free)),
                ("hom_to_quotient_zero", Value::from(p.hom_to_quotient_zero)),
                ("annihilator", Value::from(ann.render())),
            ],
        },
    );

    let j = ideal(r, &["x", "y"])?;
    let p = profile(&j)?;
    record(
        t,
        Assertion {
            ring: name.clone(),
            generators: j.render(),
            claim: "(x,y) is a non-rigid non-free trace ideal with Hom(J,R/J) != 0",
            holds: p.is_trace && !p.rigid && !p.free && !p.hom_to_quotient_zero,
            measured: vec![
                ("trace_ideal", Value::from(p.is_trace)),
                ("rigid", Value::from(p.rigid)),
                ("free", Value::from(p.free)),
                ("hom_to_quotient_zero", Value::from(p.hom_to_quotient_zero)),
            ],
        },
    );

    let i = ideal(r, &["x + y"])?;
    let p = profile(&i)?;
    record(
        t,
        Assertion {
            ring: name,
            generators: i.render(),
            claim: "principal ideal of a nonzerodivisor has trace R",
            holds: p.trace == vec!["1"],
            measured: vec![("trace", Value::from(p.trace))],
        },
    );
    Ok(())
}

fn plane_example(t: &mut Tally) -> Result<()> {
    let f = fixtures::plane()?;
    let r = &f.ring;
    let i = ideal(r, &["x", "y"])?;
    let g = grade(&i)?;
    let p = profile(&i)?;
    record(
        t,
        Assertion {
            ring: r.display().to_string(),
            generators: i.render(),
            claim: "grade 2 ideal is a non-rigid trace ideal",
            holds: g == 2 && p.is_trace && !p.rigid,
            measured: vec![("grade", Value::from(g)), ("trace_ideal", Value::from(p.is_trace)), ("rigid", Value::from(p.rigid))],
        },
    );
    Ok(())
}

/// Traces of the fixture ideals of `k[t^3, t^4, t^5]` lie in `{0, m, R}`.
fn semigroup_example(t: &mut Tally) -> Result<()> {
    let f = fixtures::semigroup()?;
    let r = &f.ring;
    let name = r.display().to_string();
    let targets = [
        ("0", Ideal::new(r, &[])?),
        ("m", ideal(r, &["a", "b", "c"])?),
        ("R", ideal(r, &["1"])?),
    ];
    for gens in &f.ideals {
        let i = Ideal::new(r, gens)?;
        let trace = trace_ideal(&present_ideal(r, i.generators())?, TraceMethod::HomImages)?.ideal()?;
        let mut label = None;
        for (l, target) in &targets {
            if trace.equals(target)? {
                label = Some(*l);
            }
        }
        t.count(&format!("semigroup_trace_{}", label.unwrap_or("other")));
        record(
            t,
            Assertion {
                ring: name.clone(),
                generators: i.render(),
                claim: "trace is 0, m or R",
                holds: label.is_some(),
                measured: vec![("trace", Value::from(trace.render()))],
            },
        );
    }
    Ok(())
}

pub(crate) fn run() -> Result<Tally> {
    let mut t = Tally::default();
    hypersurface_example(&mut t)?;
    node_example(&mut t)?;
    plane_example(&mut t)?;
    semigroup_example(&mut t)?;
    Ok(t)
}
