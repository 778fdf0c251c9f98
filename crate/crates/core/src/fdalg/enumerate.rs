//! Enumeration of ideals of an Artinian algebra.

use std::collections::{HashSet, VecDeque};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{ideal_generators, FiniteAlgebra, Subspace};
use crate::arith::Field;
use crate::poly::Poly;

/// How ideals are produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdealSource {
    /// Every monomial ideal, in breadth-first order from `(0)`.
    Monomial,
    /// `count` ideals generated by one to three random elements of the
    /// maximal ideal; repeats are kept.
    Random { seed: u64, count: usize },
}

/// An ideal with its subspace and minimal generators.
#[derive(Clone, Debug)]
pub struct FdIdeal<F: Field> {
    pub subspace: Subspace<F::Elem>,
    pub generators: Vec<Poly<F>>,
}

pub fn enumerate_ideals<F: Field>(a: &FiniteAlgebra<F>, source: IdealSource) -> Vec<FdIdeal<F>> {
    let k = a.field();
    let d = a.dim();
    let unit = |i: usize| {
        let mut v = vec![k.zero(); d];
        v[i] = k.one();
        v
    };
    let subspaces = match source {
        IdealSource::Monomial => {
            let mut seen = HashSet::new();
            let mut order = Vec::new();
            let mut queue = VecDeque::from([Subspace::zero(d)]);
            seen.insert(Subspace::zero(d));
            while let Some(ideal) = queue.pop_front() {
                for b in 0..d {
                    let v = unit(b);
                    if ideal.contains(k, &v) {
                        continue;
                    }
                    let next = ideal.sum(k, &a.ideal_span(&[v]));
                    if seen.insert(next.clone()) {
                        queue.push_back(next);
                    }
                }
                order.push(ideal);
            }
            order
        }
        IdealSource::Random { seed, count } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let u = a.unit_index();
            (0..count)
                .map(|_| {
                    let n = rng.gen_range(1..=3);
                    let gens: Vec<Vec<F::Elem>> = (0..n)
                        .map(|_| loop {
                            let v: Vec<F::Elem> =
                                (0..d).map(|i| if i == u { k.zero() } else { k.random(&mut rng) }).collect();
                            if d == 1 || v.iter().any(|e| !k.is_zero(e)) {
                                break v;
                            }
                        })
                        .collect();
                    a.ideal_span(&gens)
                })
                .collect()
        }
    };
    subspaces
        .into_iter()
        .map(|subspace| FdIdeal { generators: ideal_generators(a, &subspace), subspace })
        .collect()
}
