//! Far-pair census: counting the class-local edges a labeling forces.
//!
//! Two class-`t` positions are an `i`-far pair when exactly `i - 1`
//! class-`t` positions sit between them in the order, and an `i`-far edge
//! when they are also within power distance `m`. Careful: run sizes of a
//! partition and far-edge counts are different quantities even though
//! both traditionally go by `x_i`; on this side of the fence everything
//! is a count or a floor.

use crate::error::{Error, Result};
use crate::exact::Rational;

use super::{all_classes_clique_free, LabeledPowerPath};

/// Number of `q`-far edges of class `t`: pairs of class members exactly
/// `q` apart in the class subsequence and within `m` in the order.
pub fn q_far_count(path: &LabeledPowerPath, t: u8, q: u32) -> Result<u64> {
    if q == 0 {
        return Err(Error::domain("far distance q must be at least 1"));
    }
    let pos = path.class_positions(t);
    let q = q as usize;
    let mut count = 0u64;
    for idx in 0..pos.len().saturating_sub(q) {
        if (pos[idx + q] - pos[idx]) as u64 <= path.m() {
            count += 1;
        }
    }
    Ok(count)
}

/// Smallest number of `i`-far edges that one window of `m + 1`
/// consecutive positions can carry, over all splits of the window into
/// `k + 1` class counts of at most `s - 1` each.
///
/// A class contributing `c` positions to the window forces
/// `max(0, c - i)` edges at class distance `i`, all inside the window;
/// minimizing over splits gives the per-window floor that
/// [`far_count_floor`] integrates along the path. Errors when the window
/// cannot be split at all (more than `(k+1)(s-1)` positions).
pub fn segment_far_minimum(k: u32, m: u64, s: u32, i: u32) -> Result<u64> {
    if k == 0 || s < 2 || i == 0 {
        return Err(Error::domain(
            "segment census needs k >= 1, s >= 2, i >= 1",
        ));
    }
    if k > 16 || m > 1024 {
        return Err(Error::resource(
            "segment census capped at k <= 16 and m <= 1024",
        ));
    }
    let slots = k as usize + 1;
    let total = (m + 1) as usize;
    let per_slot = (s - 1) as usize;
    if slots.saturating_mul(per_slot) < total {
        return Err(Error::domain(
            "window larger than the classes can hold; no feasible split",
        ));
    }
    // dp[r]: least forced count over the slots filled so far summing to r
    const INF: u64 = u64::MAX / 2;
    let mut dp = vec![INF; total + 1];
    dp[0] = 0;
    for _ in 0..slots {
        let mut next = vec![INF; total + 1];
        for r in 0..=total {
            if dp[r] == INF {
                continue;
            }
            for c in 0..=per_slot.min(total - r) {
                let pen = (c as u64).saturating_sub(i as u64);
                let cell = &mut next[r + c];
                if dp[r] + pen < *cell {
                    *cell = dp[r] + pen;
                }
            }
        }
        dp = next;
    }
    if dp[total] >= INF {
        return Err(Error::internal("feasible split escaped the dp"));
    }
    Ok(dp[total])
}

/// Windowed floor on a path-wide far count: `z` forced edges per window
/// of `m + 1` consecutive positions, each edge visible from at most
/// `m + 1 - i` windows, over the `L - m` full windows of the path.
/// Negative for `L < m`; callers decide whether that is informative.
pub fn far_count_floor(z: u64, l: u64, m: u64, i: u64) -> Result<Rational> {
    if i == 0 || i > m {
        return Err(Error::domain("far distance i must satisfy 1 <= i <= m"));
    }
    let span = Rational::from_u64(l) - Rational::from_u64(m);
    Ok(Rational::from_u64(z) * span / Rational::from_u64(m + 1 - i))
}

/// Verdict of a far-count coupling evaluation, both sides exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FarBoundOutcome {
    pub holds: bool,
    pub lhs: Rational,
    pub rhs: Rational,
}

/// Evaluates the coupling between far counts at distances `i` and `j`:
/// `L - x_i <= (k+1) i + i x_j / (s+h-i-j)`, with `x_i`, `x_j` the far
/// edge counts summed over all classes.
///
/// Requires `m = k(s-1) + h`, far distances beyond the spanning reach
/// (`i, j > h`) with positive coupling depth (`s+h-i-j >= 1`), labels
/// within `0..=k`, and every class clique-free at size `s`; each failure
/// is a domain error. On instances meeting the gate the inequality is
/// forced; evaluating it measures that instead of assuming it.
pub fn far_coupling_check(
    path: &LabeledPowerPath,
    k: u32,
    s: u32,
    h: u32,
    i: u32,
    j: u32,
) -> Result<FarBoundOutcome> {
    if k == 0 || s < 2 {
        return Err(Error::domain("coupling needs k >= 1 and s >= 2"));
    }
    if k > 255 {
        return Err(Error::domain("labels are bytes, so k <= 255"));
    }
    let expected_m = (k as u64) * (s as u64 - 1) + h as u64;
    if path.m() != expected_m {
        return Err(Error::domain(format!(
            "power mismatch: the path has m = {}, but k(s-1)+h = {}",
            path.m(),
            expected_m
        )));
    }
    if i <= h || j <= h {
        return Err(Error::domain(
            "far distances must exceed the spanning reach h",
        ));
    }
    let depth = s as i64 + h as i64 - i as i64 - j as i64;
    if depth < 1 {
        return Err(Error::domain(
            "coupling depth s+h-i-j must be at least 1",
        ));
    }
    if path.max_label() as u32 > k {
        return Err(Error::domain("a label exceeds k"));
    }
    if !all_classes_clique_free(path, s) {
        return Err(Error::domain(
            "a class packs s positions into one window",
        ));
    }
    let mut xi = 0u64;
    let mut xj = 0u64;
    for t in 0..=k {
        xi += q_far_count(path, t as u8, i)?;
        xj += q_far_count(path, t as u8, j)?;
    }
    let lhs = Rational::from_u64(path.len() as u64) - Rational::from_u64(xi);
    let rhs = Rational::from_u64((k as u64 + 1) * i as u64)
        + Rational::from_u64(i as u64) * Rational::from_u64(xj)
            / Rational::from_i64(depth);
    let holds = lhs <= rhs;
    Ok(FarBoundOutcome { holds, lhs, rhs })
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;

    fn rat(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn periodic(m: u64, n: u32, classes: u8) -> LabeledPowerPath {
        let labels: Vec<u8> = (0..n).map(|p| (p % classes as u32) as u8).collect();
        LabeledPowerPath::new(m, (0..n).collect(), labels).unwrap()
    }

    #[test]
    fn far_count_on_a_small_example() {
        // class 2 sits at positions 1,2,4,6,8; at q = 3 only the first
        // pair (1,6) stays within m = 5
        let mut labels = vec![0u8; 10];
        for &p in &[1usize, 2, 4, 6, 8] {
            labels[p] = 2;
        }
        let p = LabeledPowerPath::new(5, (0..10).collect(), labels.clone()).unwrap();
        assert_eq!(q_far_count(&p, 2, 3).unwrap(), 1);
        let tight = LabeledPowerPath::new(4, (0..10).collect(), labels).unwrap();
        assert_eq!(q_far_count(&tight, 2, 3).unwrap(), 0);
    }

    #[test]
    fn far_count_degenerate_distances() {
        let p = periodic(12, 30, 3);
        // consecutive class members are 3 apart in the order
        assert_eq!(q_far_count(&p, 0, 1).unwrap(), 9);
        assert_eq!(q_far_count(&p, 0, 4).unwrap(), 6);
        assert_eq!(q_far_count(&p, 0, 40).unwrap(), 0);
        assert!(q_far_count(&p, 0, 0).is_err());
    }

    #[test]
    fn segment_minimum_reference_values() {
        let cases: [(u32, u64, u32, u32, u64); 9] = [
            (2, 13, 6, 4, 2),
            (2, 18, 8, 5, 4),
            (2, 20, 9, 6, 3),
            (2, 20, 9, 5, 6),
            (2, 10, 5, 3, 2),
            (3, 14, 5, 3, 3),
            (3, 17, 6, 3, 6),
            (2, 15, 7, 4, 4),
            (2, 17, 8, 4, 6),
        ];
        for (k, m, s, i, want) in cases {
            assert_eq!(
                segment_far_minimum(k, m, s, i).unwrap(),
                want,
                "at ({k},{m},{s},{i})"
            );
        }
    }

    #[test]
    fn segment_minimum_rejects_overstuffed_windows() {
        // 3 classes of at most 4 cannot tile a window of 14
        assert!(segment_far_minimum(2, 13, 5, 3).is_err());
        assert!(segment_far_minimum(0, 13, 6, 3).is_err());
        assert!(segment_far_minimum(2, 13, 1, 3).is_err());
        assert!(segment_far_minimum(2, 13, 6, 0).is_err());
        assert!(segment_far_minimum(2, 2000, 6, 3).is_err());
    }

    #[test]
    fn count_floor_reference_values() {
        // two forced edges per window at distance 4 under m = 13
        assert_eq!(far_count_floor(2, 100, 13, 4).unwrap(), rat("87/5"));
        // six forced edges per window at distance 5 under m = 20
        assert_eq!(far_count_floor(6, 100, 20, 5).unwrap(), rat("30"));
        assert_eq!(far_count_floor(0, 100, 13, 4).unwrap(), rat("0"));
        // short paths yield a vacuous negative floor
        assert_eq!(far_count_floor(1, 5, 13, 4).unwrap(), rat("-4/5"));
        assert!(far_count_floor(1, 100, 13, 0).is_err());
        assert!(far_count_floor(1, 100, 13, 14).is_err());
    }

    #[test]
    fn coupling_on_a_periodic_labeling() {
        // m = 12 = 2*(6-1) + 2, three classes of 10 on 30 positions
        let p = periodic(12, 30, 3);
        let out = far_coupling_check(&p, 2, 6, 2, 3, 4).unwrap();
        assert!(out.holds);
        // every class pair at distance 3 spans 9 <= 12: x_3 = 21
        assert_eq!(out.lhs, rat("9"));
        // (k+1) i + i x_4 / 1 with x_4 = 18
        assert_eq!(out.rhs, rat("63"));
    }

    #[test]
    fn coupling_gates_on_its_preconditions() {
        let p = periodic(12, 30, 3);
        // depth s+h-i-j = 0
        assert!(far_coupling_check(&p, 2, 6, 2, 3, 5).is_err());
        // far distances must exceed h
        assert!(far_coupling_check(&p, 2, 6, 2, 2, 4).is_err());
        // power mismatch
        assert!(far_coupling_check(&p, 2, 7, 2, 3, 4).is_err());
        // one packed class breaks clique-freeness
        let packed = LabeledPowerPath::unlabeled(12, 30).unwrap();
        assert!(far_coupling_check(&packed, 2, 6, 2, 3, 4).is_err());
    }

    proptest! {
        /// The dp agrees with the capacity closed form
        /// max(0, m+1-(k+1)i) wherever the window is feasible.
        #[test]
        fn segment_minimum_matches_closed_form(
            k in 1u32..=3,
            m in 1u64..=24,
            s in 2u32..=26,
            i in 1u32..=30,
        ) {
            prop_assume!((k as u64 + 1) * (s as u64 - 1) >= m + 1);
            let got = segment_far_minimum(k, m, s, i).unwrap();
            let want = (m + 1).saturating_sub((k as u64 + 1) * i as u64);
            prop_assert_eq!(got, want);
        }

        /// Monotone: farther distances and looser class caps never force
        /// more edges.
        #[test]
        fn segment_minimum_is_monotone(
            k in 1u32..=3,
            m in 1u64..=24,
            s in 2u32..=26,
            i in 1u32..=29,
        ) {
            prop_assume!((k as u64 + 1) * (s as u64 - 1) >= m + 1);
            let here = segment_far_minimum(k, m, s, i).unwrap();
            let farther = segment_far_minimum(k, m, s, i + 1).unwrap();
            prop_assert!(farther <= here);
            let looser = segment_far_minimum(k, m, s + 1, i).unwrap();
            prop_assert!(looser <= here);
        }

        /// Couplings hold on every block-shuffled clique-free labeling.
        #[test]
        fn coupling_holds_on_blockwise_labelings(
            perms in proptest::collection::vec(0usize..6, 8..=16),
        ) {
            const PATTERNS: [[u8; 3]; 6] =
                [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
            let labels: Vec<u8> = perms.iter().flat_map(|&i| PATTERNS[i]).collect();
            let n = labels.len() as u32;
            // m = 12 = 2*(6-1)+2: windows of 13 hold at most 5 per class
            let p = LabeledPowerPath::new(12, (0..n).collect(), labels).unwrap();
            let out = far_coupling_check(&p, 2, 6, 2, 3, 4).unwrap();
            prop_assert!(out.holds);
        }
    }
}
