//! Deterministic substream derivation for parallel Monte Carlo trials.
//!
//! Every trial owns a private ChaCha8 generator keyed by the user seed, with
//! the generator's 64-bit stream index selecting the substream. Trial `t` of
//! grid point `p` uses stream `(p << 32) | t`, so reruns are byte-identical
//! for any worker count and grid points never share a trial stream.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Trials per grid point are capped at `2^32` so stream indices cannot
/// collide across points.
pub const MAX_TRIALS_PER_POINT: u64 = 1 << 32;

/// The generator for one (seed, stream) pair.
pub fn substream(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Base stream index for grid point `point_index`.
pub fn point_stream_base(point_index: usize) -> u64 {
    (point_index as u64) << 32
}
