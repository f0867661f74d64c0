//! Seeded randomness. Everything that draws random numbers goes through
//! ChaCha8 streams derived from a single run seed, so a run is reproducible
//! from `(inputs, config, seed)` alone — no OS entropy, no wall clock.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// The deterministic RNG used throughout the crate.
pub type SeedRng = ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> SeedRng {
    SeedRng::seed_from_u64(seed)
}

/// Derives an independent sub-seed for a named stage of a run, so inserting
/// a draw in one stage cannot shift the stream of another.
pub fn subseed(seed: u64, stage: u64, index: u64) -> u64 {
    // SplitMix64 finalizer over the mixed words.
    let mut v = seed
        .wrapping_mul(0x9e37_79b9_7f4a_7c15)
        .wrapping_add(stage.wrapping_mul(0xbf58_476d_1ce4_e5b9))
        .wrapping_add(index.wrapping_mul(0x94d0_49bb_1331_11eb))
        .wrapping_add(0x2545_f491_4f6c_dd1d);
    v ^= v >> 30;
    v = v.wrapping_mul(0xbf58_476d_1ce4_e5b9);
    v ^= v >> 27;
    v = v.wrapping_mul(0x94d0_49bb_1331_11eb);
    v ^= v >> 31;
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    #[test]
    fn same_seed_same_stream() {
        let mut a = rng_from_seed(42);
        let mut b = rng_from_seed(42);
        for _ in 0..64 {
            assert_eq!(a.gen::<u64>(), b.gen::<u64>());
        }
    }

    #[test]
    fn subseeds_distinct_across_stage_and_index() {
        let mut seen = alloc::collections::BTreeSet::new();
        for stage in 0..8u64 {
            for index in 0..8u64 {
                assert!(seen.insert(subseed(7, stage, index)));
            }
        }
    }
}
