//! Deterministic randomness: one user seed fans out into named streams so
//! any trial is replayable from its report row.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha12Rng;

/// Splits a base seed into independent, reproducible streams keyed by name.
///
/// ChaCha keeps the byte streams identical across platforms, which the
/// determinism guarantees rely on.
#[derive(Debug, Clone, Copy)]
pub struct SeedSplitter {
    base: u64,
}

impl SeedSplitter {
    pub fn new(base: u64) -> Self {
        SeedSplitter { base }
    }

    pub fn base(&self) -> u64 {
        self.base
    }

    /// RNG for the stream `name`.
    pub fn stream(&self, name: &str) -> ChaCha12Rng {
        ChaCha12Rng::seed_from_u64(fnv1a(self.base, name, 0))
    }

    /// RNG for the `idx`th member of a trial family (per-trial streams).
    pub fn stream_indexed(&self, name: &str, idx: u64) -> ChaCha12Rng {
        ChaCha12Rng::seed_from_u64(fnv1a(self.base, name, idx))
    }

    /// Derived splitter, for handing a module its own seed space.
    pub fn child(&self, name: &str) -> SeedSplitter {
        SeedSplitter {
            base: fnv1a(self.base, name, 0),
        }
    }
}

fn fnv1a(base: u64, name: &str, idx: u64) -> u64 {
    const OFFSET: u64 = 0xcbf29ce484222325;
    const PRIME: u64 = 0x100000001b3;
    let mut h = OFFSET;
    for &b in base
        .to_le_bytes()
        .iter()
        .chain(name.as_bytes())
        .chain(idx.to_le_bytes().iter())
    {
        h ^= b as u64;
        h = h.wrapping_mul(PRIME);
    }
    h
}
