//! Seeded random streams.
//!
//! Every random quantity is drawn from a ChaCha8 generator keyed by the
//! user's master seed. Independent work units (sample blocks, bootstrap
//! resamples, worker ranges) use distinct stream ids of the same key, so the
//! split function is simply `(seed, stream) -> ChaCha8(seed).set_stream(stream)`.
//! Results never depend on which thread consumed which stream.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Number of Monte Carlo samples drawn from one stream.
pub const SAMPLE_BLOCK: usize = 1024;

/// Stream ids at or above this offset are reserved for bootstrap resampling.
pub const BOOTSTRAP_STREAM_OFFSET: u64 = 1 << 48;

pub fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}
