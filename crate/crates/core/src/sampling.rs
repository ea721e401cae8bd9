//! Seeded randomness. Every randomized check takes its seed explicitly so
//! results are reproducible.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg::{q, Rat, Subspace};

pub const DEFAULT_SEED: u64 = 0xC0FFEE;
pub const DEFAULT_SAMPLES: usize = 64;

/// Seed and sample budget for randomized checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Config {
    pub seed: u64,
    pub samples: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config { seed: DEFAULT_SEED, samples: DEFAULT_SAMPLES }
    }
}

impl Config {
    pub fn rng(&self) -> ChaCha8Rng {
        seeded_rng(self.seed)
    }

    /// A derived config for an independent sub-task.
    pub fn fork(&self, salt: u64) -> Config {
        Config { seed: self.seed ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15), samples: self.samples }
    }
}

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random integer combination of the basis of `s`, coefficients in `[-3, 3]`.
pub fn random_element<R: Rng>(s: &Subspace, rng: &mut R) -> Vec<Rat> {
    let coeffs: Vec<Rat> = (0..s.dim()).map(|_| q(rng.gen_range(-3..=3))).collect();
    s.combine(&coeffs)
}

pub fn random_int_vec<R: Rng>(n: usize, rng: &mut R) -> Vec<Rat> {
    (0..n).map(|_| q(rng.gen_range(-3..=3))).collect()
}
