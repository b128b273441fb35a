//! Seeded inputs shared by the benchmarks.

use doxa_core::decisions::DecisionFunction;
use doxa_core::rational::ratio;
use doxa_core::search::random_divisible_with;
use doxa_core::{Event, InfoStructure, Measure, Profile, Relation, StateSpace};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A path `w1 → w2 → … → wn`, the worst case for closure depth.
pub fn chain_profile(n: usize) -> Profile {
    let space = StateSpace::numbered(n).unwrap();
    let pairs: Vec<(usize, usize)> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    let rel = Relation::from_pairs(&space, pairs).unwrap();
    Profile::numbered(vec![doxa_core::info_from_relation(&rel), InfoStructure::identity(&space)]).unwrap()
}

/// A divisible structure on `n` states with a random blindspot set.
pub fn divisible(n: usize, seed: u64) -> InfoStructure {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let space = StateSpace::numbered(n).unwrap();
    let blind = Event::from_indices(n, (1..n).filter(|_| rng.gen_bool(0.25)));
    random_divisible_with(&mut rng, &space, &blind).unwrap()
}

/// Posterior of a random target under a random positive prior.
pub fn posterior(n: usize, seed: u64) -> DecisionFunction {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let space = StateSpace::numbered(n).unwrap();
    let raw: Vec<i64> = (0..n).map(|_| rng.gen_range(1..=9)).collect();
    let sum: i64 = raw.iter().sum();
    let prior = Measure::new(&space, raw.iter().map(|&w| ratio(w, sum)).collect()).unwrap();
    let target = Event::from_indices(n, (0..n).filter(|_| rng.gen_bool(0.5)));
    DecisionFunction::posterior(prior, target).unwrap()
}
