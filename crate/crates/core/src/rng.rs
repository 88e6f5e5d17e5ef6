//! Deterministic seed derivation.
//!
//! Every stochastic routine in the crate draws its noise from a stream that
//! is a pure function of `(master seed, index tags)`. This makes results
//! independent of the execution schedule: a path keeps its noise whether it
//! is simulated on one thread or sixteen.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Derives a 256-bit ChaCha seed from a master seed and a tag path.
pub fn derive_seed(master: u64, tags: &[u64]) -> [u8; 32] {
    let mut state = master ^ 0x6a09_e667_f3bc_c908;
    let _ = splitmix64(&mut state);
    for &t in tags {
        state ^= t.wrapping_mul(0xff51_afd7_ed55_8ccd);
        let _ = splitmix64(&mut state);
    }
    let mut seed = [0u8; 32];
    for chunk in seed.chunks_exact_mut(8) {
        chunk.copy_from_slice(&splitmix64(&mut state).to_le_bytes());
    }
    seed
}

/// A ChaCha stream addressed by `(master, tags)`.
pub fn stream(master: u64, tags: &[u64]) -> ChaCha8Rng {
    ChaCha8Rng::from_seed(derive_seed(master, tags))
}
