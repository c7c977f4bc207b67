//! Deterministic, splittable random streams.
//!
//! Every stochastic computation in this crate draws from a [`SplitMix64`]
//! stream derived from a user seed plus a domain tag plus integer indices.
//! A stream is fully determined by its key, so work items can be evaluated
//! in any order (or on any number of threads) and still produce identical
//! results.
//!
//! The generator is pinned for reproducibility:
//!
//! * state update: `s += 0x9e3779b97f4a7c15` (the golden-ratio increment)
//! * output: the SplitMix64 finalizer
//!   `z ^= z >> 30; z *= 0xbf58476d1ce4e5b9; z ^= z >> 27; z *= 0x94d049bb133111eb; z ^= z >> 31`
//! * key derivation: `key = mix(seed)` folded with `mix(tag + increment)`
//!   for each tag, see [`SplitMix64::keyed`]
//! * uniform doubles: top 53 bits of `next_u64`, giving values in `[0, 1)`
//!
//! Changing any of these constants changes every ensemble; bump
//! [`crate::ensemble::GENERATOR_VERSION`] if that ever becomes necessary.

const GOLDEN: u64 = 0x9e37_79b9_7f4a_7c15;

/// SplitMix64 finalizer (Stafford's Mix13 variant used by the reference
/// SplitMix64 implementation).
#[inline]
pub fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Minimal counter-based PRNG. Not cryptographic; stable and fast.
#[derive(Debug, Clone, Copy)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    /// Stream keyed by `(seed, tags...)`. Distinct tag sequences give
    /// statistically independent streams.
    pub fn keyed(seed: u64, tags: &[u64]) -> Self {
        let mut key = mix64(seed);
        for &t in tags {
            key = mix64(key ^ mix64(t.wrapping_add(GOLDEN)));
        }
        Self::new(key)
    }

    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN);
        mix64(self.state)
    }

    /// Uniform in `[0, 1)` with 53 bits of precision.
    #[inline]
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in `[lo, hi)`.
    #[inline]
    pub fn next_range(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next_f64()
    }
}

/// Domain tags for stream derivation. FNV-1a of the ASCII domain name,
/// fixed here as constants so keys never drift.
pub mod domain {
    /// fnv1a64("ensemble")
    pub const ENSEMBLE: u64 = 0x6343_c886_8f8d_6b7a;
    /// fnv1a64("subsample")
    pub const SUBSAMPLE: u64 = 0x8f6d_9e27_5c13_3e17;
    /// fnv1a64("telesim-mc")
    pub const TELESIM_MC: u64 = 0x5d82_c2ea_f050_b5fb;
    /// fnv1a64("xcorpus")
    pub const XCORPUS: u64 = 0x301b_4614_5ac5_e413;
    /// fnv1a64("ginibre")
    pub const GINIBRE: u64 = 0xc24f_e864_cfaa_1bbb;

    #[cfg(test)]
    pub(crate) fn fnv1a64(name: &str) -> u64 {
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        for b in name.bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x0000_0100_0000_01b3);
        }
        h
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_sequence() {
        // First outputs of SplitMix64 seeded with 1234567, from the
        // reference implementation.
        let mut rng = SplitMix64::new(1234567);
        assert_eq!(rng.next_u64(), 0x599e_d017_fb08_fc85);
        assert_eq!(rng.next_u64(), 0x2c73_f084_5854_0fa5);
        assert_eq!(rng.next_u64(), 0x883e_bce5_a3f2_7c77);
    }

    #[test]
    fn keyed_streams_differ() {
        let a = SplitMix64::keyed(42, &[2, 0]).next_u64();
        let b = SplitMix64::keyed(42, &[2, 1]).next_u64();
        let c = SplitMix64::keyed(42, &[3, 0]).next_u64();
        let d = SplitMix64::keyed(43, &[2, 0]).next_u64();
        assert!(a != b && a != c && a != d && b != c);
    }

    #[test]
    fn keyed_streams_reproducible() {
        let mut s1 = SplitMix64::keyed(7, &[domain::ENSEMBLE, 4, 99]);
        let mut s2 = SplitMix64::keyed(7, &[domain::ENSEMBLE, 4, 99]);
        for _ in 0..100 {
            assert_eq!(s1.next_u64(), s2.next_u64());
        }
    }

    #[test]
    fn f64_in_unit_interval() {
        let mut rng = SplitMix64::new(99);
        for _ in 0..10_000 {
            let x = rng.next_f64();
            assert!((0.0..1.0).contains(&x));
        }
    }

    #[test]
    fn domain_tags_match_fnv1a() {
        assert_eq!(domain::ENSEMBLE, domain::fnv1a64("ensemble"));
        assert_eq!(domain::SUBSAMPLE, domain::fnv1a64("subsample"));
        assert_eq!(domain::TELESIM_MC, domain::fnv1a64("telesim-mc"));
        assert_eq!(domain::XCORPUS, domain::fnv1a64("xcorpus"));
        assert_eq!(domain::GINIBRE, domain::fnv1a64("ginibre"));
    }
}
