//! Check reports and their JSON form.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
}

/// A violated statement, with the values that violate it.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Counterexample {
    pub ring: String,
    pub generators: Vec<String>,
    pub instance: String,
    pub measured: BTreeMap<String, Value>,
}

/// The Gröbner path and the linear-algebra path gave different answers.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EngineDisagreement {
    pub ring: String,
    pub generators: Vec<String>,
    pub instance: String,
    pub quantity: String,
    pub groebner: Value,
    pub linear_algebra: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SkippedInstance {
    pub ring: String,
    pub generators: Vec<String>,
    pub instance: String,
    pub reason: String,
}

/// Which ambient modules the lemma checks pair submodules with.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Ambients {
    /// Ideals inside `R`.
    Ring,
    /// Also images of ideals in `R/K` and submodules of `R^2`.
    All,
}

/// Limits applied by a check; unused ones are still reported.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bounds {
    /// Syzygy window `[low, high]`; negative entries are cosyzygies.
    pub window: (i64, i64),
    pub ext_bound: usize,
    pub exhaustive: bool,
    pub random_count: usize,
    pub dim_cap: usize,
    pub max_degree: Option<u32>,
    pub pair_limit: usize,
    pub ambients: Ambients,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            window: (-2, 2),
            ext_bound: 4,
            exhaustive: true,
            random_count: 0,
            dim_cap: tracemod::fdalg::DEFAULT_DIMENSION_CAP,
            max_degree: None,
            pair_limit: 400,
            ambients: Ambients::All,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub check_id: String,
    pub paper_ref: String,
    pub instances_tested: usize,
    pub verdict: Verdict,
    pub counterexamples: Vec<Counterexample>,
    pub engine_disagreements: Vec<EngineDisagreement>,
    pub skipped: Vec<SkippedInstance>,
    pub summary: BTreeMap<String, Value>,
    pub seed: u64,
    pub bounds: Bounds,
    pub wall_ms: u64,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.verdict != Verdict::Fail && self.engine_disagreements.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }

    /// JSON with the timing field zeroed.
    pub fn to_json_untimed(&self) -> String {
        Report { wall_ms: 0, ..self.clone() }.to_json()
    }

    pub fn render_text(&self) -> String {
        let mut out = format!(
            "{}: {} ({} tested, {} skipped, {} counterexamples, {} engine disagreements, {} ms)",
            self.check_id,
            match self.verdict {
                Verdict::Pass => "pass",
                Verdict::Fail => "FAIL",
                Verdict::Skipped => "skipped",
            },
            self.instances_tested,
            self.skipped.len(),
            self.counterexamples.len(),
            self.engine_disagreements.len(),
            self.wall_ms,
        );
        for c in &self.counterexamples {
            out.push_str(&format!(
                "\n  counterexample in {} at ({}), {}: {}",
                c.ring,
                c.generators.join(", "),
                c.instance,
                serde_json::to_string(&c.measured).expect("values serialize"),
            ));
        }
        for d in &self.engine_disagreements {
            out.push_str(&format!(
                "\n  disagreement in {} at ({}), {} {}: groebner {} vs linear algebra {}",
                d.ring,
                d.generators.join(", "),
                d.instance,
                d.quantity,
                d.groebner,
                d.linear_algebra,
            ));
        }
        out
    }
}

/// Collects outcomes while a check runs.
#[derive(Default)]
pub(crate) struct Tally {
    pub tested: usize,
    pub counterexamples: Vec<Counterexample>,
    pub disagreements: Vec<EngineDisagreement>,
    pub skipped: Vec<SkippedInstance>,
    pub summary: BTreeMap<String, Value>,
}

impl Tally {
    pub fn merge(&mut self, other: Tally) {
        self.tested += other.tested;
        self.counterexamples.extend(other.counterexamples);
        self.disagreements.extend(other.disagreements);
        self.skipped.extend(other.skipped);
        for (k, v) in other.summary {
            let merged = match (self.summary.remove(&k), &v) {
                (Some(Value::Number(a)), Value::Number(b)) => {
                    Value::from(a.as_u64().unwrap_or(0) + b.as_u64().unwrap_or(0))
                }
                (Some(Value::Bool(a)), Value::Bool(b)) => Value::Bool(a || *b),
                _ => v,
            };
            self.summary.insert(k, merged);
        }
    }

    pub fn count(&mut self, key: &str) {
        self.merge(Tally { summary: BTreeMap::from([(key.to_string(), Value::from(1u64))]), ..Tally::default() });
    }
}
