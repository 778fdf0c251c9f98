//! Vanishing of `Ext^1(R/I, R)` forces `I` to be a trace ideal.

use serde_json::Value;

use tracemod::fdalg::{fd_ext1, fd_trace, ideal_generators, ideal_module, quotient_algebra_module, FDModule};
use tracemod::fpmod::{present_ideal, PresentedModule};
use tracemod::homolog::{ext, trace_ideal, TraceMethod};
use tracemod::{Field, Ideal, Result};

use super::ideal_summary;
use crate::context::{dim_value, Context};
use crate::report::Tally;

pub(crate) fn run<F: Field>(ctx: &Context<F>) -> Result<Tally> {
    let gorenstein = ctx.is_gorenstein()?;
    let r = PresentedModule::free(&ctx.ring, 1);
    let mut t = ctx.par(&ctx.ideals, |case| {
        let mut t = Tally::default();
        t.tested += case.multiplicity;
        let gens = case.ideal.generators();
        let rendered = &case.rendered;
        let e = ext(1, &PresentedModule::cyclic_quotient(&ctx.ring, gens), &r)?;
        let hypothesis = e.is_zero()?;
        let module = present_ideal(&ctx.ring, gens)?;
        let trace = trace_ideal(&module, TraceMethod::HomImages)?.ideal()?;
        let by_kernel = trace_ideal(&module, TraceMethod::LeftKernel)?.ideal()?;
        if !trace.equals(&by_kernel)? {
            ctx.compare(
                &mut t,
                rendered,
                "hom images vs left kernel",
                "trace ideal",
                Value::from(trace.render()),
                Value::from(by_kernel.render()),
            );
        }
        let is_trace = trace.equals(&case.ideal)?;
        t.count(if is_trace { "trace_ideals" } else { "non_trace_ideals" });
        if hypothesis {
            t.count("ext_vanishes");
            if !is_trace {
                t.counterexamples.push(ctx.counterexample(
                    rendered,
                    "Ext^1(R/I,R) = 0",
                    &[("trace", Value::from(trace.render()))],
                ));
            }
        } else if !is_trace {
            t.count("consistent_non_instances");
        }
        if gorenstein && !hypothesis {
            t.counterexamples.push(ctx.counterexample(
                rendered,
                "Artinian Gorenstein",
                &[("ext1_dim", dim_value(e.vector_dimension()?))],
            ));
        }
        if let Some(a) = ctx.algebra.as_ref() {
            let k = a.field();
            let sub = a.ideal_from_polys(gens);
            let fd_trace_sub = fd_trace(k, &ideal_module(a, &sub), &FDModule::regular(a));
            let fd_trace_ideal = Ideal::new(&ctx.ring, &ideal_generators(a, &fd_trace_sub))?;
            ctx.compare(
                &mut t,
                rendered,
                "I",
                "trace ideal",
                Value::from(trace.render()),
                Value::from(fd_trace_ideal.render()),
            );
            let fd_e = fd_ext1(a, &quotient_algebra_module(a, &sub), &FDModule::regular(a));
            ctx.compare(&mut t, rendered, "I", "dim Ext^1(R/I,R)", dim_value(e.vector_dimension()?), Value::from(fd_e));
        }
        Ok(t)
    })?;
    t.summary.insert("gorenstein".into(), Value::from(gorenstein));
    ideal_summary(ctx, &mut t);
    Ok(t)
}
