//! Seed management.
//!
//! A master seed spawns one independent child stream per named purpose, so
//! adding a new consumer of randomness never perturbs the draws seen by
//! existing ones.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha12Rng;

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = x;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn fnv1a(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

/// Spawns deterministic, mutually independent RNG streams from a master seed.
#[derive(Debug, Clone, Copy)]
pub struct SeedTree {
    master: u64,
}

impl SeedTree {
    pub fn new(master: u64) -> Self {
        Self { master }
    }

    pub fn master(&self) -> u64 {
        self.master
    }

    /// Child stream identified by a purpose label, e.g. `"ue-drop"`.
    pub fn stream(&self, purpose: &str) -> ChaCha12Rng {
        self.indexed_stream(purpose, 0)
    }

    /// Child stream identified by a purpose label and an index (e.g. a
    /// Monte-Carlo drop number), so per-drop streams stay independent.
    pub fn indexed_stream(&self, purpose: &str, index: u64) -> ChaCha12Rng {
        let mut state = splitmix64(self.master ^ fnv1a(purpose.as_bytes())) ^ splitmix64(index);
        let mut seed = [0u8; 32];
        for chunk in seed.chunks_mut(8) {
            state = splitmix64(state);
            chunk.copy_from_slice(&state.to_le_bytes());
        }
        ChaCha12Rng::from_seed(seed)
    }

    /// Derives a sub-tree, used to give each sweep cell its own seed space.
    pub fn subtree(&self, purpose: &str, index: u64) -> SeedTree {
        SeedTree {
            master: splitmix64(self.master ^ fnv1a(purpose.as_bytes()) ^ splitmix64(index)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::RngCore;

    #[test]
    fn streams_are_deterministic() {
        let a = SeedTree::new(7).stream("ue-drop").next_u64();
        let b = SeedTree::new(7).stream("ue-drop").next_u64();
        assert_eq!(a, b);
    }

    #[test]
    fn streams_differ_by_purpose_and_index() {
        let t = SeedTree::new(7);
        let a = t.stream("ue-drop").next_u64();
        let b = t.stream("shadowing").next_u64();
        let c = t.indexed_stream("ue-drop", 1).next_u64();
        assert_ne!(a, b);
        assert_ne!(a, c);
    }
}
