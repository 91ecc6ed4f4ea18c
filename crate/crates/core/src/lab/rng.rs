//! Counter-based randomness.
//!
//! Every draw is a pure function of `(seed, counter)`: no generator state is
//! carried between draws. That buys two things the experiments rely on. A
//! graph is reproducible bit-for-bit from its seed alone, and the same
//! underlying uniform draw can be compared against two edge probabilities,
//! which makes the monotone coupling G(n, p1) subset of G(n, p2) exact
//! rather than statistical.

use num_bigint::BigUint;

use crate::exact::Rational;

/// Golden-ratio increment of the splitmix64 stream.
const PHI: u64 = 0x9E37_79B9_7F4A_7C15;

/// The `counter`-th output of a splitmix64 generator seeded with `seed`.
///
/// Sequential splitmix64 advances its state by [`PHI`] before applying the
/// avalanche finalizer, so the counter-th output is the finalizer evaluated
/// at `seed + (counter + 1) * PHI`. Computing it directly lets callers index
/// the stream at random (by pair index, by trial index) without replay.
pub fn mix64(seed: u64, counter: u64) -> u64 {
    let mut z = seed.wrapping_add(counter.wrapping_add(1).wrapping_mul(PHI));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Dense rank of the unordered pair `u < v` in the order
/// (0,1), (0,2), (1,2), (0,3), (1,3), ...: rank = C(v, 2) + u.
///
/// Ranks are consecutive from 0, so each pair owns one slot of the draw
/// stream and no two pairs ever share a draw.
pub fn pair_index(u: u32, v: u32) -> u64 {
    debug_assert!(u < v, "pair_index wants u < v, got ({u}, {v})");
    u64::from(v) * (u64::from(v) - 1) / 2 + u64::from(u)
}

/// Whether a 64-bit uniform draw lands below probability `p`.
///
/// Reads `draw` as the numerator of a uniform value in [0, 1) with
/// denominator 2^64 and compares exactly:
/// draw / 2^64 < p  iff  draw * denom(p) < numer(p) * 2^64.
/// For a fixed draw the outcome is monotone in `p`, which is exactly what
/// the coupled-seed experiments need.
pub fn below(p: &Rational, draw: u64) -> bool {
    debug_assert!(!p.is_negative(), "probabilities are nonnegative");
    let lhs = BigUint::from(draw) * p.denom().magnitude();
    let rhs = p.numer().magnitude() << 64usize;
    lhs < rhs
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;

    #[test]
    fn matches_the_published_splitmix64_stream() {
        // Reference outputs of splitmix64 from state 0, as used for seeding
        // the xoshiro family. Any change to the mixer breaks every frozen
        // sample in the crate, so the stream itself is pinned here.
        assert_eq!(mix64(0, 0), 0xE220_A839_7B1D_CDAF);
        assert_eq!(mix64(0, 1), 0x6E78_9E6A_A1B9_65F4);
        assert_eq!(mix64(0, 2), 0x06C4_5D18_8009_454F);
    }

    #[test]
    fn counters_never_collide_for_a_fixed_seed() {
        // state = seed + (counter+1)*PHI is injective in counter (PHI is
        // odd) and the finalizer is a bijection, so outputs are distinct.
        let mut seen = HashSet::new();
        for counter in 0..10_000 {
            assert!(seen.insert(mix64(42, counter)));
        }
    }

    #[test]
    fn pair_index_is_a_dense_bijection() {
        let n = 40u32;
        let total = u64::from(n) * u64::from(n - 1) / 2;
        let mut hit = vec![false; total as usize];
        for v in 1..n {
            for u in 0..v {
                let idx = pair_index(u, v) as usize;
                assert!(!hit[idx], "pair ({u}, {v}) collides at {idx}");
                hit[idx] = true;
            }
        }
        assert!(hit.iter().all(|&h| h));
    }

    #[test]
    fn threshold_matches_the_definition() {
        let zero = Rational::zero();
        let one = Rational::one();
        let half = Rational::new(1, 2).unwrap();
        for draw in [0, 1, u64::MAX / 2, u64::MAX - 1, u64::MAX] {
            assert!(!below(&zero, draw));
            assert!(below(&one, draw));
            assert_eq!(below(&half, draw), draw < 1 << 63);
        }
    }

    #[test]
    fn threshold_is_monotone_in_p() {
        let ladder: Vec<Rational> = (0..=10).map(|i| Rational::new(i, 10).unwrap()).collect();
        for draw in [0u64, 7, 1 << 40, u64::MAX / 3, u64::MAX] {
            for w in ladder.windows(2) {
                // once below the smaller probability, always below the larger
                assert!(!below(&w[0], draw) || below(&w[1], draw));
            }
        }
    }
}
