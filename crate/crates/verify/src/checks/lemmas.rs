//! Characterisations of trace modules over submodule pairs `M ⊆ X`.

use serde_json::Value;

use tracemod::fdalg::{fd_ext1, fd_hom, fd_trace, PresentedFd};
use tracemod::fpmod::{PresentedModule, Submodule};
use tracemod::homolog::{annihilator, contains_regular_element, hom_module, rigidity, trace_module_test};
use tracemod::{Field, Poly, Result};

use super::{ideal_summary, sample};
use crate::context::{dim_value, Context};
use crate::report::{Ambients, Tally};

struct Pair<F: Field> {
    ambient: usize,
    gens: Vec<Vec<Poly<F>>>,
}

fn column<F: Field>(gens: &[Poly<F>]) -> Vec<Vec<Poly<F>>> {
    gens.iter().map(|g| vec![g.clone()]).collect()
}

/// Ambient modules `R`, `R/K` for proper nonzero `K`, and `R^2`, with the
/// submodule pairs drawn from the ideal list.
fn pairs<F: Field>(ctx: &Context<F>) -> (Vec<(String, PresentedModule<F>)>, Vec<Pair<F>>) {
    let ring = &ctx.ring;
    let zero = ring.zero();
    let mut ambients = vec![("R".to_string(), PresentedModule::free(ring, 1))];
    let mut out = Vec::new();
    for case in &ctx.ideals {
        out.push(Pair { ambient: 0, gens: column::<F>(case.ideal.generators()) });
    }
    if ctx.bounds.ambients == Ambients::Ring {
        return (ambients, sample(out, ctx.bounds.pair_limit, ctx.seed));
    }
    for k in &ctx.ideals {
        if k.ideal.is_zero() || k.ideal.is_unit() {
            continue;
        }
        let idx = ambients.len();
        ambients.push((
            format!("R/({})", k.rendered.join(", ")),
            PresentedModule::cyclic_quotient(ring, k.ideal.generators()),
        ));
        for case in &ctx.ideals {
            if !k.ideal.contains_ideal(&case.ideal) {
                out.push(Pair { ambient: idx, gens: column::<F>(case.ideal.generators()) });
            }
        }
    }
    let plane = ambients.len();
    ambients.push(("R^2".to_string(), PresentedModule::free(ring, 2)));
    for i in &ctx.ideals {
        let diagonal: Vec<Vec<Poly<F>>> = i.ideal.generators().iter().map(|g| vec![g.clone(), g.clone()]).collect();
        if !diagonal.is_empty() {
            out.push(Pair { ambient: plane, gens: diagonal });
        }
        for j in &ctx.ideals {
            let mut gens: Vec<Vec<Poly<F>>> =
                i.ideal.generators().iter().map(|g| vec![g.clone(), zero.clone()]).collect();
            gens.extend(j.ideal.generators().iter().map(|h| vec![zero.clone(), h.clone()]));
            if !gens.is_empty() {
                out.push(Pair { ambient: plane, gens });
            }
        }
    }
    let out = sample(out, ctx.bounds.pair_limit, ctx.seed);
    (ambients, out)
}

fn render_vectors<F: Field>(ctx: &Context<F>, gens: &[Vec<Poly<F>>]) -> Vec<String> {
    gens.iter()
        .map(|v| {
            let parts: Vec<String> = v.iter().map(|p| ctx.ring.render(p)).collect();
            if parts.len() == 1 {
                parts[0].clone()
            } else {
                format!("[{}]", parts.join(", "))
            }
        })
        .collect()
}

pub(crate) fn run<F: Field>(ctx: &Context<F>) -> Result<Tally> {
    let (ambients, pairs) = pairs(ctx);
    let local = ctx.ring.has_local_structure();
    let mut t = ctx.par(&pairs, |pair| {
        let mut t = Tally::default();
        let (label, x) = &ambients[pair.ambient];
        let rendered = render_vectors(ctx, &pair.gens);
        let instance = format!("M in {label}");
        let sub = Submodule::new(x, pair.gens.clone())?;
        t.tested += 1;
        let test = trace_module_test(&sub)?;
        let trace = test.equals_own_trace;
        if !test.consistent() {
            t.counterexamples.push(ctx.counterexample(
                &rendered,
                &format!("{instance}: T_X(M) = M vs End(M) = Hom(M, X)"),
                &[("equals_own_trace", Value::from(trace)), ("maps_stay_inside", Value::from(test.maps_stay_inside))],
            ));
        }
        if trace {
            t.count("trace_modules");
        }
        let fd = ctx.algebra.as_ref().map(|a| {
            let px = PresentedFd::new(a, x);
            let msub = px.submodule_span(a, &pair.gens);
            let m_fd = px.module.submodule(a.field(), &msub);
            (a, px, msub, m_fd)
        });
        if let Some((a, px, msub, m_fd)) = &fd {
            let fd_is_trace = fd_trace(a.field(), m_fd, &px.module) == *msub;
            ctx.compare(&mut t, &rendered, &instance, "trace module", Value::from(trace), Value::from(fd_is_trace));
        }
        if sub.is_everything()? {
            return Ok(t);
        }
        let m = sub.present()?;
        let quotient = sub.quotient();
        let hom = hom_module(&m, &quotient)?;
        let hom_zero = hom.is_zero()?;
        if hom_zero {
            t.count("hom_to_quotient_vanishes");
            if !trace {
                t.counterexamples.push(ctx.counterexample(
                    &rendered,
                    &format!("{instance}: Hom(M, X/M) = 0"),
                    &[("trace", Value::from(false))],
                ));
            }
        }
        let mut ext1 = None;
        if trace && !hom_zero {
            let v = rigidity(&m)?;
            ext1 = Some(v.ext1_dim);
            if v.rigid {
                t.counterexamples.push(ctx.counterexample(
                    &rendered,
                    &format!("{instance}: rigid trace module"),
                    &[("hom_to_quotient_dim", dim_value(hom.vector_dimension()?))],
                ));
            } else {
                t.count("non_rigid_trace_with_hom");
            }
        }
        let finite = m.vector_dimension()?.is_some() && quotient.vector_dimension()?.is_some();
        if local && finite {
            let regular = contains_regular_element(&annihilator(&m)?, &quotient)?;
            t.count("finite_length_pairs");
            if regular != hom_zero {
                t.counterexamples.push(ctx.counterexample(
                    &rendered,
                    &format!("{instance}: Hom(M, X/M) = 0 vs regular element in Ann M"),
                    &[("hom_vanishes", Value::from(hom_zero)), ("regular_element", Value::from(regular))],
                ));
            }
        }
        if let Some((a, px, msub, m_fd)) = &fd {
            let k = a.field();
            let q_fd = px.module.quotient(k, msub);
            let fd_dim = fd_hom(k, m_fd, &q_fd).len();
            ctx.compare(&mut t, &rendered, &instance, "dim Hom(M, X/M)", dim_value(hom.vector_dimension()?), Value::from(fd_dim));
            if let Some(e) = ext1 {
                ctx.compare(&mut t, &rendered, &instance, "dim Ext^1(M,M)", dim_value(e), Value::from(fd_ext1(a, m_fd, m_fd)));
            }
        }
        Ok(t)
    })?;
    t.summary.insert("pairs".into(), Value::from(pairs.len()));
    ideal_summary(ctx, &mut t);
    Ok(t)
}
