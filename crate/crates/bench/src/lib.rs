//! Shared fixtures for the criterion benchmarks.

use bistar::EdgeColoring;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Seeded uniform k-coloring of `K_{n,n}`.
pub fn random_coloring(seed: u64, n: usize, k: u32) -> EdgeColoring {
    let mut rng = StdRng::seed_from_u64(seed);
    EdgeColoring::from_fn(n, n, k, |_, _| rng.random_range(1..=k))
}
