//! Deterministic, counter-based RNG streams.
//!
//! Every consumer derives its stream from `(master seed, purpose, index)`,
//! so results are bit-reproducible under any execution order or thread
//! count.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Stream purposes, kept distinct so that e.g. noise-assignment sampling and
/// shot sampling never share a stream.
#[derive(Clone, Copy, Debug)]
pub enum Stream {
    Reference = 1,
    Assignment = 2,
    Shot = 3,
    Instance = 4,
}

pub fn stream_rng(master: u64, stream: Stream, index: u64) -> ChaCha8Rng {
    let mut state = master ^ (stream as u64).wrapping_mul(0xa076_1d64_78bd_642f);
    state ^= index.wrapping_mul(0xe703_7ed1_a0b4_28db);
    let mut seed = [0u8; 32];
    for chunk in seed.chunks_mut(8) {
        chunk.copy_from_slice(&splitmix64(&mut state).to_le_bytes());
    }
    ChaCha8Rng::from_seed(seed)
}
