//! Executable checks for trace modules, rigidity and the Auslander-Reiten
//! property over quotients of polynomial rings. Each check enumerates
//! instances, records counterexamples to the mathematical statement
//! separately from disagreements between the Gröbner and linear-algebra
//! engines, and emits a deterministic [`Report`].

mod catalog;
mod checks;
mod context;
pub mod fixtures;
mod report;

use std::sync::Arc;
use std::time::Instant;

use tracemod::{Error, Field, Poly, QuotientRing, Result};

pub use catalog::{CheckId, CATALOG};
pub use report::{Ambients, Bounds, Counterexample, EngineDisagreement, Report, SkippedInstance, Verdict};

/// What to run and where.
#[derive(Clone, Debug)]
pub struct CheckSpec<F: Field> {
    pub id: CheckId,
    pub ring: Option<Arc<QuotientRing<F>>>,
    /// Explicit ideals; enumeration of the Artinian ring otherwise.
    pub ideals: Option<Vec<Vec<Poly<F>>>>,
    pub seed: u64,
    pub bounds: Bounds,
    pub jobs: usize,
}

impl<F: Field> CheckSpec<F> {
    pub fn new(id: CheckId, ring: Option<Arc<QuotientRing<F>>>) -> Self {
        CheckSpec { id, ring, ideals: None, seed: 0, bounds: Bounds::default(), jobs: 1 }
    }

    pub fn with_ideals(mut self, ideals: Vec<Vec<Poly<F>>>) -> Self {
        self.ideals = Some(ideals);
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_bounds(mut self, bounds: Bounds) -> Self {
        self.bounds = bounds;
        self
    }

    pub fn with_jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs.max(1);
        self
    }
}

pub fn run_check<F: Field>(spec: &CheckSpec<F>) -> Result<Report> {
    if spec.bounds.window.0 > spec.bounds.window.1 || spec.bounds.ext_bound == 0 || spec.bounds.dim_cap == 0 {
        return Err(Error::InvalidInput("bounds must be positive and the window nonempty".into()));
    }
    let start = Instant::now();
    let tally = if spec.id == CheckId::ExampleFixtures {
        checks::examples::run()?
    } else {
        let ring = spec.ring.as_ref().ok_or_else(|| Error::InvalidInput(format!("{} needs a ring", spec.id.name())))?;
        let ctx = context::Context::new(ring, spec)?;
        match spec.id {
            CheckId::TraceLemmas => checks::lemmas::run(&ctx)?,
            CheckId::ExtVanishingTrace => checks::ext_trace::run(&ctx)?,
            CheckId::SyzygyRigidity => checks::census::run_rigidity(&ctx)?,
            CheckId::BoundedArc => checks::census::run_bounded_arc(&ctx)?,
            CheckId::OracleAgreement => checks::oracle::run(&ctx)?,
            CheckId::ExampleFixtures => unreachable!(),
        }
    };
    Ok(finish(spec, tally, start.elapsed().as_millis() as u64))
}

fn finish<F: Field>(spec: &CheckSpec<F>, tally: report::Tally, wall_ms: u64) -> Report {
    let verdict = if !tally.counterexamples.is_empty() {
        Verdict::Fail
    } else if tally.tested == 0 {
        Verdict::Skipped
    } else {
        Verdict::Pass
    };
    Report {
        check_id: spec.id.name().to_string(),
        paper_ref: spec.id.statement().to_string(),
        instances_tested: tally.tested,
        verdict,
        counterexamples: tally.counterexamples,
        engine_disagreements: tally.disagreements,
        skipped: tally.skipped,
        summary: tally.summary,
        seed: spec.seed,
        bounds: spec.bounds.clone(),
        wall_ms,
    }
}
