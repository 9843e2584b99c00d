//! Seeded random instances for the property suites: bounded Borel
//! generator lists sampled as random sorted index tuples, and random linear
//! extensions of the sorted-index partial order. Identical seeds produce
//! identical instances.

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::monomial::Monomial;

pub fn rng_for_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Ranges for the instance generator.
#[derive(Clone, Copy, Debug)]
pub struct SampleConfig {
    /// Ambient variable count, sampled from 2..=n_max.
    pub n_max: usize,
    /// Generator degree, sampled from 1..=d_max (capped by what fits).
    pub d_max: u32,
    /// Exponent bound, sampled from 1..=k_max; 1 forces squarefree.
    pub k_max: u32,
    /// Number of Borel generators, sampled from 1..=m_max.
    pub m_max: usize,
    /// Give all generators one common degree.
    pub equigenerated: bool,
}

/// A sampled family of Borel generators.
#[derive(Clone, Debug)]
pub struct SampledInstance {
    pub n: usize,
    pub k: u32,
    pub borel_gens: Vec<Monomial>,
}

/// One random k-bounded monomial of the given degree: indices drawn
/// uniformly and re-drawn until every multiplicity fits the bound.
pub fn random_bounded_monomial(rng: &mut impl Rng, n: usize, degree: u32, k: u32) -> Monomial {
    assert!(degree as usize <= n * k as usize, "degree exceeds capacity");
    loop {
        let mut indices: Vec<usize> = (0..degree).map(|_| rng.random_range(1..=n)).collect();
        indices.sort_unstable();
        let bounded = indices
            .chunk_by(|a, b| a == b)
            .all(|run| run.len() as u32 <= k);
        if bounded {
            return Monomial::from_index_form(&indices, n).expect("indices in range");
        }
    }
}

/// A random Borel-generator instance under the given ranges.
pub fn sample_instance(rng: &mut impl Rng, config: &SampleConfig) -> SampledInstance {
    let n = rng.random_range(2..=config.n_max);
    let k = rng.random_range(1..=config.k_max);
    let m = rng.random_range(1..=config.m_max);
    let cap = (n as u32 * k).min(config.d_max);
    let common_degree = rng.random_range(1..=cap);
    let mut borel_gens = Vec::with_capacity(m);
    for _ in 0..m {
        let degree = if config.equigenerated {
            common_degree
        } else {
            rng.random_range(1..=cap)
        };
        borel_gens.push(random_bounded_monomial(rng, n, degree, k));
    }
    borel_gens.sort_by(|a, b| b.cmp(a));
    borel_gens.dedup();
    SampledInstance { n, k, borel_gens }
}

/// A random linear extension of the sorted-index order on an equigenerated
/// generator set: whenever u strictly precedes v, u is listed first.
pub fn random_linear_extension(rng: &mut impl Rng, gens: &[Monomial]) -> Vec<Monomial> {
    let mut remaining: Vec<&Monomial> = gens.iter().collect();
    let mut out = Vec::with_capacity(gens.len());
    while !remaining.is_empty() {
        let minimal: Vec<usize> = (0..remaining.len())
            .filter(|&i| {
                !remaining.iter().enumerate().any(|(j, w)| {
                    j != i && w != &remaining[i] && w.precedes(remaining[i]).expect("equal degrees")
                })
            })
            .collect();
        let &pick = minimal
            .choose(rng)
            .expect("finite poset has minimal elements");
        out.push(remaining.remove(pick).clone());
    }
    out
}
