//! Rigidity censuses over Artinian Gorenstein rings.

use serde_json::Value;

use tracemod::fdalg::{fd_cosyzygy_n, fd_ext1, fd_syzygy_n, ideal_module, FDModule};
use tracemod::fpmod::{present_ideal, PresentedModule};
use tracemod::homolog::{ext_range, rigidity, syzygy_any};
use tracemod::{Error, Field, Result};

use super::ideal_summary;
use crate::context::{dim_value, Context, IdealCase};
use crate::report::Tally;

fn window<F: Field>(ctx: &Context<F>) -> Vec<i64> {
    (ctx.bounds.window.0..=ctx.bounds.window.1).collect()
}

/// `Ω^n I` on the linear-algebra side.
fn fd_shift<F: Field>(ctx: &Context<F>, case: &IdealCase<F>, n: i64) -> Option<FDModule<F>> {
    let a = ctx.algebra.as_ref()?;
    let i = ideal_module(a, &a.ideal_from_polys(case.ideal.generators()));
    Some(if n >= 0 { fd_syzygy_n(a, &i, n as usize) } else { fd_cosyzygy_n(a, &i, n.unsigned_abs() as usize) })
}

/// Walks the window for one ideal, calling `body` on each nonzero shift;
/// `body` returns `dim Ext^1(M, M)` for the cross-check.
fn each_shift<F: Field>(
    ctx: &Context<F>,
    case: &IdealCase<F>,
    allow_unit: bool,
    mut body: impl FnMut(&mut Tally, i64, &str, &PresentedModule<F>) -> Result<Option<usize>>,
) -> Result<Tally> {
    let mut t = Tally::default();
    let gens = &case.rendered;
    if case.ideal.is_zero() {
        t.skipped.push(ctx.skip(gens, "all n", "zero ideal"));
        return Ok(t);
    }
    if case.ideal.is_unit() && !allow_unit {
        t.skipped.push(ctx.skip(gens, "all n", "ideal is not proper"));
        return Ok(t);
    }
    let module = present_ideal(&ctx.ring, case.ideal.generators())?;
    for n in window(ctx) {
        let instance = format!("n={n}");
        let m = syzygy_any(&module, n)?;
        if m.is_zero()? {
            t.skipped.push(ctx.skip(gens, &instance, "syzygy vanishes"));
            continue;
        }
        t.tested += case.multiplicity;
        let ext1 = body(&mut t, n, &instance, &m)?;
        if let (Some(a), Some(fm)) = (ctx.algebra.as_ref(), fd_shift(ctx, case, n)) {
            ctx.compare(&mut t, gens, &instance, "dim", dim_value(m.vector_dimension()?), Value::from(fm.dim()));
            ctx.compare(&mut t, gens, &instance, "dim Ext^1(M,M)", dim_value(ext1), Value::from(fd_ext1(a, &fm, &fm)));
        }
    }
    Ok(t)
}

/// Every nonzero `Ω^n I` of a proper ideal is non-rigid.
pub(crate) fn run_rigidity<F: Field>(ctx: &Context<F>) -> Result<Tally> {
    if !ctx.is_gorenstein()? {
        return Err(Error::NotGorenstein);
    }
    let mut t = ctx.par(&ctx.ideals, |case| {
        each_shift(ctx, case, false, |t, _, instance, m| {
            let v = rigidity(m)?;
            if v.rigid {
                t.counterexamples.push(ctx.counterexample(
                    &case.rendered,
                    instance,
                    &[("ext1_dim", dim_value(v.ext1_dim)), ("free", Value::from(v.free))],
                ));
            }
            Ok(v.ext1_dim)
        })
    })?;
    ideal_summary(ctx, &mut t);
    Ok(t)
}

/// Rigid shifts are free, and non-free ideals have a nonvanishing
/// `Ext^i(I, I ⊕ R)` with `1 <= i <= ext_bound`.
pub(crate) fn run_bounded_arc<F: Field>(ctx: &Context<F>) -> Result<Tally> {
    if !ctx.is_gorenstein()? {
        return Err(Error::NotGorenstein);
    }
    let bound = ctx.bounds.ext_bound;
    let mut t = ctx.par(&ctx.ideals, |case| {
        each_shift(ctx, case, true, |t, n, instance, m| {
            let v = rigidity(m)?;
            if v.rigid && !v.free {
                t.counterexamples.push(ctx.counterexample(
                    &case.rendered,
                    instance,
                    &[("rigid", Value::from(true)), ("free", Value::from(false))],
                ));
            }
            if n == 0 && !v.free {
                let target = m.direct_sum(&PresentedModule::free(&ctx.ring, 1))?;
                let exts = ext_range(bound, m, &target)?;
                let mut first = None;
                for (i, e) in exts.iter().enumerate().skip(1) {
                    if !e.is_zero()? {
                        first = Some(i);
                        break;
                    }
                }
                match first {
                    Some(i) => t.count(&format!("first_nonvanishing_ext_{i}")),
                    None => t.counterexamples.push(ctx.counterexample(
                        &case.rendered,
                        instance,
                        &[("free", Value::from(false)), ("ext_vanishes_through", Value::from(bound))],
                    )),
                }
            }
            if v.rigid {
                t.count("rigid_free");
            }
            Ok(v.ext1_dim)
        })
    })?;
    ideal_summary(ctx, &mut t);
    Ok(t)
}
