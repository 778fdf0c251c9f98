pub(crate) mod census;
pub(crate) mod examples;
pub(crate) mod ext_trace;
pub(crate) mod lemmas;
pub(crate) mod oracle;

use serde_json::Value;

use crate::context::Context;
use crate::report::Tally;
use tracemod::Field;

/// Counts of distinct and sampled ideals.
pub(crate) fn ideal_summary<F: Field>(ctx: &Context<F>, tally: &mut Tally) {
    tally.summary.insert("distinct_ideals".into(), Value::from(ctx.ideals.len()));
    tally.summary.insert("sampled_ideals".into(), Value::from(ctx.ideals.iter().map(|c| c.multiplicity).sum::<usize>()));
}

/// At most `limit` items; a seeded subset in original order when there are
/// more.
pub(crate) fn sample<T>(items: Vec<T>, limit: usize, seed: u64) -> Vec<T> {
    use rand::seq::index::sample as pick;
    use rand::SeedableRng;
    if items.len() <= limit {
        return items;
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut chosen = pick(&mut rng, items.len(), limit).into_vec();
    chosen.sort_unstable();
    let mut keep = vec![false; items.len()];
    for i in chosen {
        keep[i] = true;
    }
    items.into_iter().zip(keep).filter(|(_, k)| *k).map(|(x, _)| x).collect()
}
