//! Shared state of a running check: the ring, its finite-dimensional
//! algebra when Artinian, the instance list and the worker pool.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use rayon::prelude::*;
use serde_json::Value;

use tracemod::fdalg::{algebraize, enumerate_ideals, FiniteAlgebra, IdealSource};
use tracemod::{Error, Field, Ideal, Poly, QuotientRing, Result};

use crate::report::{Counterexample, EngineDisagreement, SkippedInstance, Tally};
use crate::{Bounds, CheckSpec};

/// A distinct ideal and how many times the source produced it.
#[derive(Clone, Debug)]
pub(crate) struct IdealCase<F: Field> {
    pub ideal: Ideal<F>,
    pub rendered: Vec<String>,
    pub multiplicity: usize,
}

pub(crate) struct Context<F: Field> {
    pub ring: Arc<QuotientRing<F>>,
    pub ring_name: String,
    pub algebra: Option<FiniteAlgebra<F>>,
    pub ideals: Vec<IdealCase<F>>,
    pub seed: u64,
    pub bounds: Bounds,
    pool: rayon::ThreadPool,
}

impl<F: Field> Context<F> {
    pub fn new(ring: &Arc<QuotientRing<F>>, spec: &CheckSpec<F>) -> Result<Self> {
        let ring = match spec.bounds.max_degree {
            Some(cap) => QuotientRing::clone(ring).with_degree_cap(Some(cap)).into_ref(),
            None => ring.clone(),
        };
        let algebra = match algebraize(&ring, spec.bounds.dim_cap) {
            Ok(a) => Some(a),
            Err(Error::NotArtinian) => None,
            Err(Error::DimensionCapExceeded(_)) if spec.ideals.is_some() => None,
            Err(e) => return Err(e),
        };
        let sources: Vec<Vec<Poly<F>>> = match (&spec.ideals, &algebra) {
            (Some(list), _) => list.iter().map(|g| g.iter().map(|p| ring.reduce(p)).collect()).collect(),
            (None, Some(a)) => {
                let mut out = Vec::new();
                if spec.bounds.exhaustive {
                    out.extend(enumerate_ideals(a, IdealSource::Monomial));
                }
                if spec.bounds.random_count > 0 {
                    out.extend(enumerate_ideals(a, IdealSource::Random { seed: spec.seed, count: spec.bounds.random_count }));
                }
                out.into_iter().map(|i| i.generators).collect()
            }
            (None, None) => return Err(Error::NotArtinian),
        };
        let mut ideals: Vec<IdealCase<F>> = Vec::new();
        let mut seen: HashMap<Vec<String>, usize> = HashMap::new();
        for gens in sources {
            let ideal = Ideal::new(&ring, &gens)?;
            let rendered = ideal.render();
            match seen.get(&rendered) {
                Some(&i) => ideals[i].multiplicity += 1,
                None => {
                    seen.insert(rendered.clone(), ideals.len());
                    ideals.push(IdealCase { ideal, rendered, multiplicity: 1 });
                }
            }
        }
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(spec.jobs.max(1))
            .build()
            .map_err(|e| Error::InvalidInput(format!("worker pool: {e}")))?;
        let ring_name = ring.display().to_string();
        Ok(Context { ring, ring_name, algebra, ideals, seed: spec.seed, bounds: spec.bounds.clone(), pool })
    }

    /// Runs `f` on every item in parallel and merges the tallies in item
    /// order.
    pub fn par<T: Sync>(&self, items: &[T], f: impl Fn(&T) -> Result<Tally> + Sync + Send) -> Result<Tally> {
        let results: Vec<Result<Tally>> = self.pool.install(|| items.par_iter().map(&f).collect());
        let mut total = Tally::default();
        for r in results {
            total.merge(r?);
        }
        Ok(total)
    }

    pub fn is_gorenstein(&self) -> Result<bool> {
        tracemod::homolog::is_artinian_gorenstein(&self.ring)
    }

    pub fn counterexample(&self, gens: &[String], instance: &str, measured: &[(&str, Value)]) -> Counterexample {
        Counterexample {
            ring: self.ring_name.clone(),
            generators: gens.to_vec(),
            instance: instance.to_string(),
            measured: measured.iter().map(|(k, v)| (k.to_string(), v.clone())).collect::<BTreeMap<_, _>>(),
        }
    }

    pub fn skip(&self, gens: &[String], instance: &str, reason: &str) -> SkippedInstance {
        SkippedInstance {
            ring: self.ring_name.clone(),
            generators: gens.to_vec(),
            instance: instance.to_string(),
            reason: reason.to_string(),
        }
    }

    /// Records a disagreement when the two values differ.
    pub fn compare(&self, tally: &mut Tally, gens: &[String], instance: &str, quantity: &str, groebner: Value, linear: Value) {
        if groebner != linear {
            tally.disagreements.push(EngineDisagreement {
                ring: self.ring_name.clone(),
                generators: gens.to_vec(),
                instance: instance.to_string(),
                quantity: quantity.to_string(),
                groebner,
                linear_algebra: linear,
            });
        }
    }
}

/// Optional dimension as JSON.
pub(crate) fn dim_value(d: Option<usize>) -> Value {
    d.map(Value::from).unwrap_or(Value::Null)
}
