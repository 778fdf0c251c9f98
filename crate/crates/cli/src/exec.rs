//! Running a parsed session.

use std::collections::BTreeMap;
use std::io::{self, Write};
use std::sync::Arc;

use serde_json::{json, Value};
use tracemod::fpmod::{present_ideal, Matrix, PresentedModule, Submodule};
use tracemod::homolog::{self, TraceMethod};
use tracemod::{DynField, DynModule, DynRing, Error, Ideal, QuotientRing};
use tracemod_verify::{run_check, Ambients, Bounds, CheckSpec, Report};

use crate::parse::{Arg, CheckOptions, DynPoly, Op, Session, Statement};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Text,
    Json,
}

/// Global settings that statements inherit.
#[derive(Clone, Debug)]
pub struct Options {
    pub format: Format,
    pub seed: u64,
    pub jobs: usize,
    pub max_degree: Option<u32>,
    pub ext_bound: usize,
    pub dim_cap: usize,
}

impl Default for Options {
    fn default() -> Self {
        let b = Bounds::default();
        Options { format: Format::Text, seed: 0, jobs: 1, max_degree: None, ext_bound: b.ext_bound, dim_cap: b.dim_cap }
    }
}

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const COUNTEREXAMPLE: i32 = 1;
    pub const PARSE: i32 = 2;
    pub const CAP: i32 = 3;
    pub const DISAGREEMENT: i32 = 4;
    pub const OTHER: i32 = 5;
}

/// What a run produced besides its output.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub counterexamples: usize,
    pub disagreements: usize,
    /// The error that stopped execution, with the statement text.
    pub error: Option<(String, Error)>,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        match &self.error {
            Some((_, e)) => error_code(e),
            None if self.disagreements > 0 => exit::DISAGREEMENT,
            None if self.counterexamples > 0 => exit::COUNTEREXAMPLE,
            None => exit::OK,
        }
    }
}

pub fn error_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) => exit::PARSE,
        Error::DegreeCapExceeded(_) | Error::DimensionCapExceeded(_) => exit::CAP,
        _ => exit::OTHER,
    }
}

struct Env {
    rings: BTreeMap<String, Arc<DynRing>>,
    ideals: BTreeMap<String, Ideal<DynField>>,
    modules: BTreeMap<String, DynModule>,
}

/// One output record: a result object, or a check report.
enum Record {
    Result(Value),
    Report(Box<Report>),
}

/// Runs every statement in order, writing one record per operation or
/// check, and stops at the first error.
pub fn execute(session: &Session, options: &Options, out: &mut dyn Write) -> io::Result<Outcome> {
    let mut env = Env { rings: BTreeMap::new(), ideals: BTreeMap::new(), modules: BTreeMap::new() };
    let mut outcome = Outcome::default();
    for located in &session.statements {
        let record = match run_statement(&mut env, &located.statement, options) {
            Ok(r) => r,
            Err(e) => {
                outcome.error = Some((located.text.clone(), e));
                return Ok(outcome);
            }
        };
        match record {
            None => {}
            Some(Record::Result(mut value)) => {
                if value.get("disagreement").is_some() {
                    outcome.disagreements += 1;
                }
                let obj = value.as_object_mut().expect("results are objects");
                obj.insert("statement".into(), Value::String(located.text.clone()));
                match options.format {
                    Format::Json => writeln!(out, "{}", value)?,
                    Format::Text => writeln!(out, "{}", render_text(&located.text, &value))?,
                }
            }
            Some(Record::Report(report)) => {
                outcome.counterexamples += report.counterexamples.len();
                outcome.disagreements += report.engine_disagreements.len();
                match options.format {
                    Format::Json => writeln!(out, "{}", report.to_json())?,
                    Format::Text => writeln!(out, "{}", report.render_text().trim_end())?,
                }
            }
        }
    }
    Ok(outcome)
}

fn render_value(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => format!("({})", items.iter().map(render_value).collect::<Vec<_>>().join(", ")),
        Value::Null => "infinite".into(),
        other => other.to_string(),
    }
}

fn render_text(statement: &str, value: &Value) -> String {
    let fields: Vec<String> = value
        .as_object()
        .into_iter()
        .flatten()
        .filter(|(k, _)| !matches!(k.as_str(), "statement" | "op"))
        .map(|(k, v)| format!("{k}={}", render_value(v)))
        .collect();
    format!("{statement}: {}", fields.join(" "))
}

fn run_statement(env: &mut Env, statement: &Statement, options: &Options) -> tracemod::Result<Option<Record>> {
    match statement {
        Statement::Ring { name, def } => {
            let ring = QuotientRing::new(def.base.clone(), &def.relations)?.with_degree_cap(options.max_degree).into_ref();
            env.rings.insert(name.clone(), ring);
            Ok(None)
        }
        Statement::Ideal { name, def } => {
            let ideal = Ideal::new(&env.rings[&def.ring], &def.generators)?;
            env.ideals.insert(name.clone(), ideal);
            Ok(None)
        }
        Statement::Module { name, def } => {
            let ring = &env.rings[&def.ring];
            let rows: Vec<Vec<DynPoly>> = def.rows.iter().map(|r| r.iter().map(|p| ring.reduce(p)).collect()).collect();
            env.modules.insert(name.clone(), PresentedModule::coker(ring, Matrix::from_rows(rows)));
            Ok(None)
        }
        Statement::Op { op, args } => run_op(env, *op, args).map(|v| Some(Record::Result(v))),
        Statement::Check { id, ring, options: opts } => {
            let spec = check_spec(env, *id, ring, opts, options)?;
            run_check(&spec).map(|r| Some(Record::Report(Box::new(r))))
        }
    }
}

fn bad_option(key: &str, value: &str) -> Error {
    Error::Parse(format!("invalid value `{value}` for option `{key}`"))
}

fn check_spec(
    env: &Env,
    id: tracemod_verify::CheckId,
    ring: &str,
    opts: &CheckOptions,
    options: &Options,
) -> tracemod::Result<CheckSpec<DynField>> {
    let mut bounds =
        Bounds { ext_bound: options.ext_bound, dim_cap: options.dim_cap, max_degree: options.max_degree, ..Bounds::default() };
    let mut seed = options.seed;
    let mut ideals = None;
    for (key, value) in opts {
        let num = || value.parse::<usize>().map_err(|_| bad_option(key, value));
        match key.as_str() {
            "seed" => seed = value.parse().map_err(|_| bad_option(key, value))?,
            "window" => {
                let (a, b) = value.split_once("..").ok_or_else(|| bad_option(key, value))?;
                let a = a.parse().map_err(|_| bad_option(key, value))?;
                let b = b.parse().map_err(|_| bad_option(key, value))?;
                bounds.window = (a, b);
            }
            "ext_bound" => bounds.ext_bound = num()?,
            "random" => bounds.random_count = num()?,
            "exhaustive" => bounds.exhaustive = value.parse().map_err(|_| bad_option(key, value))?,
            "dim_cap" => bounds.dim_cap = num()?,
            "max_degree" => bounds.max_degree = Some(value.parse().map_err(|_| bad_option(key, value))?),
            "pairs" => bounds.pair_limit = num()?,
            "ambients" => {
                bounds.ambients = match value.as_str() {
                    "ring" => Ambients::Ring,
                    "all" => Ambients::All,
                    _ => return Err(bad_option(key, value)),
                }
            }
            "ideals" => {
                ideals = Some(value.split(',').map(|n| env.ideals[n].generators().to_vec()).collect::<Vec<_>>())
            }
            _ => return Err(bad_option(key, value)),
        }
    }
    let mut spec = CheckSpec::new(id, Some(env.rings[ring].clone())).with_seed(seed).with_bounds(bounds).with_jobs(options.jobs);
    if let Some(ideals) = ideals {
        spec = spec.with_ideals(ideals);
    }
    Ok(spec)
}

fn module(env: &Env, arg: &Arg) -> tracemod::Result<DynModule> {
    match arg {
        Arg::Ideal(name) => {
            let ideal = &env.ideals[name];
            present_ideal(ideal.ring(), ideal.generators())
        }
        Arg::Module(name) => Ok(env.modules[name].clone()),
        Arg::Ring(name) => Ok(PresentedModule::free(&env.rings[name], 1)),
        Arg::Quotient(ring, ideal) => Ok(PresentedModule::cyclic_quotient(&env.rings[ring], env.ideals[ideal].generators())),
        Arg::Int(_) => unreachable!("checked by the parser"),
    }
}

fn int(arg: &Arg) -> i64 {
    match arg {
        Arg::Int(n) => *n,
        _ => unreachable!("checked by the parser"),
    }
}

fn ideal<'a>(env: &'a Env, arg: &Arg) -> &'a Ideal<DynField> {
    match arg {
        Arg::Ideal(name) => &env.ideals[name],
        _ => unreachable!("checked by the parser"),
    }
}

fn vectors(ring: &DynRing, gens: &[Vec<DynPoly>]) -> Value {
    json!(gens.iter().map(|v| v.iter().map(|p| ring.render(p)).collect::<Vec<_>>()).collect::<Vec<_>>())
}

fn presentation(m: &DynModule) -> Value {
    json!({ "generators": m.num_generators(), "relations": m.render() })
}

fn submodule_value(s: &Submodule<DynField>) -> tracemod::Result<Value> {
    let ring = s.ring();
    Ok(match s.ambient().num_generators() {
        1 => {
            let gens: Vec<DynPoly> = s.generators().iter().map(|v| v[0].clone()).collect();
            json!(Ideal::new(ring, &gens)?.render())
        }
        _ => vectors(ring, s.generators()),
    })
}

fn run_op(env: &Env, op: Op, args: &[Arg]) -> tracemod::Result<Value> {
    let name = format!("{op:?}").to_lowercase();
    let mut value = match op {
        Op::Trace if args.len() == 1 => {
            let i = ideal(env, &args[0]);
            let m = present_ideal(i.ring(), i.generators())?;
            let hom = homolog::trace_ideal(&m, TraceMethod::HomImages)?;
            let kernel = homolog::trace_ideal(&m, TraceMethod::LeftKernel)?;
            let t = hom.ideal()?;
            let mut v = json!({
                "generators": t.render(),
                "proper": hom.proper,
                "trace_ideal": t.equals(i)?,
            });
            if !t.equals(&kernel.ideal()?)? {
                v["disagreement"] = json!({ "quantity": "trace ideal", "left_kernel": kernel.ideal()?.render() });
            }
            v
        }
        Op::Trace => {
            let m = module(env, &args[0])?;
            let x = module(env, &args[1])?;
            let t = homolog::trace_in(&m, &x)?;
            json!({ "generators": submodule_value(&t.trace)?, "proper": t.proper })
        }
        Op::Ext => {
            let i = int(&args[0]);
            if i < 0 {
                return Err(Error::InvalidInput("ext needs a nonnegative index".into()));
            }
            let e = homolog::ext(i as usize, &module(env, &args[1])?, &module(env, &args[2])?)?;
            let zero = e.is_zero()?;
            json!({ "zero": zero, "dimension": e.vector_dimension()?, "presentation": presentation(&e.pruned()) })
        }
        Op::Hom => {
            let h = homolog::hom_module(&module(env, &args[0])?, &module(env, &args[1])?)?;
            json!({ "zero": h.is_zero()?, "dimension": h.vector_dimension()?, "presentation": presentation(&h.carrier.pruned()) })
        }
        Op::Dual => {
            let h = homolog::dual(&module(env, &args[0])?)?;
            json!({ "zero": h.is_zero()?, "dimension": h.vector_dimension()?, "presentation": presentation(&h.carrier.pruned()) })
        }
        Op::Rigid => {
            let r = homolog::rigidity(&module(env, &args[0])?)?;
            json!({ "rigid": r.rigid, "free": r.free, "ext1_dimension": r.ext1_dim })
        }
        Op::Syzygy | Op::Cosyzygy => {
            let n = int(&args[0]);
            let m = module(env, &args[1])?;
            let s = if op == Op::Syzygy { homolog::syzygy_any(&m, n)? } else { homolog::syzygy_any(&m, -n)? };
            json!({ "zero": s.is_zero()?, "dimension": s.vector_dimension()?, "presentation": presentation(&s.pruned()) })
        }
        Op::Grade => json!({ "grade": homolog::grade(ideal(env, &args[0]))? }),
        Op::Ann => json!({ "generators": homolog::annihilator(&module(env, &args[0])?)?.render() }),
        Op::Socle => {
            let s = homolog::socle(&module(env, &args[0])?)?;
            json!({ "generators": submodule_value(&s)?, "dimension": s.vector_dimension()? })
        }
        Op::Conormal => {
            let c = homolog::conormal_dual(ideal(env, &args[0]))?;
            let mut v = json!({ "zero": c.vanishes, "dimension": c.dimension });
            if !c.adjunction_agrees {
                v["disagreement"] = json!({ "quantity": "conormal dual against Hom(I, R/I)" });
            }
            v
        }
        Op::Free => {
            let m = module(env, &args[0])?;
            json!({ "free": m.is_free()?, "minimal_generators": m.minimal_generators()? })
        }
        Op::Gorenstein => {
            let ring = match &args[0] {
                Arg::Ring(name) => &env.rings[name],
                _ => unreachable!("checked by the parser"),
            };
            json!({ "gorenstein": homolog::is_artinian_gorenstein(ring)?, "local_artinian": ring.is_local_artinian() })
        }
        Op::Gb => json!({ "generators": ideal(env, &args[0]).render() }),
    };
    value.as_object_mut().expect("object").insert("op".into(), Value::String(name));
    Ok(value)
}
