//! Agreement of the Gröbner and linear-algebra engines.

use serde_json::Value;

use tracemod::fdalg::{
    fd_ext1, fd_hom, fd_trace, ideal_generators, ideal_module, quotient_algebra_module, FDModule,
};
use tracemod::fpmod::{present_ideal, PresentedModule};
use tracemod::homolog::{ext, hom_module, socle, trace_ideal, TraceMethod};
use tracemod::{Error, Field, Ideal, Result};

use super::{ideal_summary, sample};
use crate::context::{dim_value, Context};
use crate::report::Tally;

/// Largest algebra compared exhaustively.
pub const ORACLE_DIMENSION_LIMIT: usize = 16;

pub(crate) fn run<F: Field>(ctx: &Context<F>) -> Result<Tally> {
    let a = ctx.algebra.as_ref().ok_or(Error::NotArtinian)?;
    if a.dim() > ORACLE_DIMENSION_LIMIT {
        return Err(Error::DimensionCapExceeded(ORACLE_DIMENSION_LIMIT));
    }
    let k = a.field();
    let ring = &ctx.ring;
    let regular = FDModule::regular(a);

    let mut t = Tally { tested: 1, ..Tally::default() };
    let soc = socle(&PresentedModule::free(ring, 1))?.vector_dimension()?;
    ctx.compare(&mut t, &[], "R", "socle dim", dim_value(soc), Value::from(regular.socle(k).dim()));

    let singles = ctx.par(&ctx.ideals, |case| {
        let mut t = Tally { tested: case.multiplicity, ..Tally::default() };
        let gens = case.ideal.generators();
        let rendered = &case.rendered;
        let sub = a.ideal_from_polys(gens);
        let i_fd = ideal_module(a, &sub);
        let q_fd = quotient_algebra_module(a, &sub);
        let i = present_ideal(ring, gens)?;
        let q = PresentedModule::cyclic_quotient(ring, gens);

        let trace = trace_ideal(&i, TraceMethod::HomImages)?.ideal()?;
        let fd_tr = Ideal::new(ring, &ideal_generators(a, &fd_trace(k, &i_fd, &regular)))?;
        ctx.compare(&mut t, rendered, "I", "trace ideal", Value::from(trace.render()), Value::from(fd_tr.render()));
        let s = socle(&i)?.vector_dimension()?;
        ctx.compare(&mut t, rendered, "I", "socle dim", dim_value(s), Value::from(i_fd.socle(k).dim()));
        let s = socle(&q)?.vector_dimension()?;
        ctx.compare(&mut t, rendered, "R/I", "socle dim", dim_value(s), Value::from(q_fd.socle(k).dim()));
        Ok(t)
    })?;
    t.merge(singles);

    let mut pairs = Vec::new();
    for i in 0..ctx.ideals.len() {
        for j in 0..ctx.ideals.len() {
            pairs.push((i, j));
        }
    }
    let pairs = sample(pairs, ctx.bounds.pair_limit, ctx.seed);
    let pair_tally = ctx.par(&pairs, |&(i, j)| {
        let mut t = Tally { tested: 1, ..Tally::default() };
        let (ci, cj) = (&ctx.ideals[i], &ctx.ideals[j]);
        let mut rendered = ci.rendered.clone();
        rendered.push("|".into());
        rendered.extend(cj.rendered.iter().cloned());
        let (si, sj) = (a.ideal_from_polys(ci.ideal.generators()), a.ideal_from_polys(cj.ideal.generators()));
        let cases = [
            (
                "Hom/Ext^1(I, R/J)",
                present_ideal(ring, ci.ideal.generators())?,
                PresentedModule::cyclic_quotient(ring, cj.ideal.generators()),
                ideal_module(a, &si),
                quotient_algebra_module(a, &sj),
            ),
            (
                "Hom/Ext^1(R/I, J)",
                PresentedModule::cyclic_quotient(ring, ci.ideal.generators()),
                present_ideal(ring, cj.ideal.generators())?,
                quotient_algebra_module(a, &si),
                ideal_module(a, &sj),
            ),
        ];
        for (label, m, n, m_fd, n_fd) in &cases {
            let h = hom_module(m, n)?.vector_dimension()?;
            ctx.compare(&mut t, &rendered, label, "dim Hom", dim_value(h), Value::from(fd_hom(k, m_fd, n_fd).len()));
            let e = ext(1, m, n)?.vector_dimension()?;
            ctx.compare(&mut t, &rendered, label, "dim Ext^1", dim_value(e), Value::from(fd_ext1(a, m_fd, n_fd)));
        }
        Ok(t)
    })?;
    t.merge(pair_tally);
    t.summary.insert("pairs".into(), Value::from(pairs.len()));
    ideal_summary(ctx, &mut t);
    Ok(t)
}
