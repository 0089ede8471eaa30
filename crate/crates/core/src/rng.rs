//! Seeded, splittable random streams.
//!
//! Every consumer derives its own ChaCha8 stream from a master seed and a
//! stream index, so results do not depend on evaluation order or on how
//! many workers run devices in parallel.

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type SimRng = ChaCha8Rng;

/// Stream `index` of the generator keyed by `master_seed`.
pub fn stream(master_seed: u64, index: u64) -> SimRng {
    let mut rng = ChaCha8Rng::seed_from_u64(master_seed);
    rng.set_stream(index);
    rng
}

/// A fresh master seed derived from `master_seed` for sub-experiment `tag`,
/// e.g. one seed per split of a sweep.
pub fn derive_seed(master_seed: u64, tag: u64) -> u64 {
    // Stream 0 is left to devices of the parent run; sub-seeds use the top
    // half of the stream space.
    stream(master_seed, (1u64 << 63) | tag).next_u64()
}
