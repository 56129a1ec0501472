//! Shared workloads for the benchmarks.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use xagdepth_core::samples::random_xag;
use xagdepth_core::Xag;

/// A seeded random network, normalized so it can also be mapped.
pub fn random_network(seed: u64, inputs: usize, gates: usize, outputs: usize) -> Xag {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_xag(&mut rng, inputs, gates, outputs)
        .propagate_inverters()
        .sweep_dead()
}
