//! End-to-end acceptance suite.
//!
//! Twelve checks, one per headline guarantee: parameter tables, settled
//! exponents, the candidate-selection scan, braid densities, power-path
//! decompositions, rewiring certificates, edge lower bounds, slope
//! constants, far-position censuses, integral-lambda families, wide-range
//! inequality scans, and the randomized lab. Each timed check also
//! enforces a wall-clock budget, so the suite doubles as a performance
//! floor. Golden values are frozen transcriptions; nothing here is
//! computed from the code under test.

use std::time::{Duration, Instant};

use hampow_core::dirac::{
    classify, ell_argmin, emit_table, f_at_int, pell_integer_lambdas, remaining_unknown,
    scan_inequalities, ClassKind, Nature, ParamsReport, ScanMode, ScanWitness, TableFormat,
};
use hampow_core::exact::Rational;
use hampow_core::graph::{braid, decompose_power_path, max_density, power_path, BraidSpec};
use hampow_core::lab::{clique_experiment, gnp, mix64, posa_gadget, GadgetSpec};
use hampow_core::oracle::{exhaustive_density, min_partition_edges};
use hampow_core::rewire::{
    bound_check, rewire, segment_far_minimum, zero_statement_slope, BoundVariant,
    LabeledPowerPath,
};
use num_bigint::BigUint;

const ORD: ClassKind = ClassKind::OrdinaryCandidate;
const OVER: ClassKind = ClassKind::OverCandidate;
const NORCR: ClassKind = ClassKind::OverNoRcr;
const TIE: ClassKind = ClassKind::BoundaryTie;
const N_ORD: Nature = Nature::Ordinary;
const N_OVER: Nature = Nature::Over;

fn rat(s: &str) -> Rational {
    s.parse().unwrap()
}

fn rpow(base: &Rational, exp: u32) -> Rational {
    let mut acc = Rational::from_u64(1);
    for _ in 0..exp {
        acc = &acc * base;
    }
    acc
}

fn assert_elapsed(start: Instant, budget_secs: u64, what: &str) {
    let took = start.elapsed();
    assert!(
        took <= Duration::from_secs(budget_secs),
        "{what} exceeded its {budget_secs}s budget: {took:?}"
    );
}

/// One golden table row: m, r_cr, ell_cr, ell, ell_star, f(ell),
/// f(ell_star), verdict, settled (reciprocal exponent, nature).
type GoldenRow = (
    u64,
    Option<u64>,
    Option<u64>,
    u64,
    Option<u64>,
    &'static str,
    Option<&'static str>,
    ClassKind,
    Option<(&'static str, Nature)>,
);

fn check_table(k: u32, from: u64, to: u64, rows: &[GoldenRow]) {
    let json = emit_table(k, from..=to, TableFormat::Json).unwrap();
    let got: Vec<ParamsReport> = serde_json::from_str(&json).unwrap();
    assert_eq!(got.len(), rows.len(), "row count for k={k}");
    for (report, row) in got.iter().zip(rows) {
        let (m, r_cr, ell_cr, ell, ell_star, f_ell, f_ell_star, verdict, known) = row;
        let at = format!("k={k} m={m}");
        assert_eq!(report.k, k, "{at}");
        assert_eq!(report.m, *m, "{at}");
        assert_eq!(report.r_cr, *r_cr, "r_cr at {at}");
        assert_eq!(report.ell_cr, *ell_cr, "ell_cr at {at}");
        assert_eq!(report.ell, *ell, "ell at {at}");
        assert_eq!(report.ell_star, *ell_star, "ell_star at {at}");
        assert_eq!(report.f_ell, rat(f_ell), "f(ell) at {at}");
        assert_eq!(
            report.f_ell_star,
            f_ell_star.map(rat),
            "f(ell_star) at {at}"
        );
        assert_eq!(report.verdict, *verdict, "verdict at {at}");
        match (&report.known, known) {
            (Some(kr), Some((recip, nature))) => {
                assert_eq!(kr.reciprocal_exponent, rat(recip), "settled value at {at}");
                assert_eq!(kr.nature, *nature, "settled nature at {at}");
            }
            (None, None) => {}
            (got_known, want_known) => {
                panic!("settled entry at {at}: got {got_known:?}, want {want_known:?}")
            }
        }
    }
}

#[test]
fn a01_parameter_tables_match_the_frozen_transcriptions() {
    let t0 = Instant::now();

    // k = 1, m = 2..10: critical parameters plus all nine settled rows.
    let k1: [GoldenRow; 9] = [
        (2, Some(0), Some(2), 2, Some(1), "1/2", Some("1"), TIE, Some(("1", N_ORD))),
        (3, Some(1), Some(2), 2, Some(1), "1", Some("3"), ORD, Some(("1", N_ORD))),
        (4, Some(1), Some(3), 3, Some(2), "4/3", Some("2"), ORD, Some(("3/2", N_ORD))),
        (5, Some(1), Some(4), 4, Some(3), "7/4", Some("2"), TIE, Some(("2", N_OVER))),
        (6, Some(1), Some(5), 5, Some(4), "11/5", Some("9/4"), OVER, Some(("9/4", N_OVER))),
        (7, Some(1), Some(6), 5, Some(5), "13/5", Some("13/5"), OVER, Some(("13/5", N_OVER))),
        (8, Some(2), Some(6), 6, Some(5), "3", Some("16/5"), ORD, Some(("3", N_ORD))),
        (9, Some(2), Some(7), 7, Some(6), "24/7", Some("7/2"), TIE, Some(("7/2", N_OVER))),
        (10, Some(2), Some(8), 7, Some(7), "27/7", Some("27/7"), OVER, Some(("27/7", N_OVER))),
    ];
    check_table(1, 2, 10, &k1);

    // k = 2, m = 7..20. The m = 19 case is open: no settled entry.
    let k2: [GoldenRow; 14] = [
        (7, Some(1), Some(3), 3, Some(2), "4/3", Some("7/2"), ORD, Some(("3/2", N_ORD))),
        (8, Some(0), Some(4), 4, Some(3), "3/2", Some("2"), TIE, Some(("2", N_OVER))),
        (9, Some(1), Some(4), 4, Some(3), "7/4", Some("3"), ORD, Some(("2", N_ORD))),
        (10, Some(0), Some(5), 5, Some(4), "2", Some("9/4"), OVER, Some(("9/4", N_OVER))),
        (11, Some(1), Some(5), 5, Some(4), "11/5", Some("3"), ORD, Some(("5/2", N_ORD))),
        (12, Some(0), Some(6), 6, Some(5), "5/2", Some("13/5"), OVER, Some(("13/5", N_OVER))),
        (13, Some(1), Some(6), 6, Some(5), "8/3", Some("16/5"), ORD, Some(("3", N_ORD))),
        (14, Some(2), Some(6), 6, Some(5), "3", Some("4"), ORD, Some(("3", N_ORD))),
        (15, Some(1), Some(7), 7, Some(6), "22/7", Some("7/2"), TIE, Some(("7/2", N_OVER))),
        (16, Some(2), Some(7), 7, Some(6), "24/7", Some("25/6"), ORD, Some(("7/2", N_ORD))),
        (17, Some(1), Some(8), 8, Some(7), "29/8", Some("27/7"), OVER, Some(("27/7", N_OVER))),
        (18, Some(2), Some(8), 8, Some(7), "31/8", Some("31/7"), ORD, Some(("4", N_ORD))),
        (19, Some(1), Some(9), 9, Some(8), "37/9", Some("17/4"), OVER, None),
        (20, Some(2), Some(9), 9, Some(8), "13/3", Some("19/4"), ORD, Some(("9/2", N_ORD))),
    ];
    check_table(2, 7, 20, &k2);

    // k = 3, m = 10..20. Three rows have no critical remainder at all.
    let k3: [GoldenRow; 11] = [
        (10, Some(1), Some(3), 3, Some(2), "4/3", Some("11/2"), ORD, Some(("3/2", N_ORD))),
        (11, None, None, 3, None, "2", None, NORCR, Some(("2", N_OVER))),
        (12, Some(0), Some(4), 4, Some(3), "3/2", Some("3"), ORD, Some(("2", N_ORD))),
        (13, Some(1), Some(4), 4, Some(3), "7/4", Some("13/3"), ORD, Some(("2", N_ORD))),
        (14, None, None, 4, None, "9/4", None, NORCR, Some(("9/4", N_OVER))),
        (15, Some(0), Some(5), 5, Some(4), "2", Some("3"), ORD, Some(("5/2", N_ORD))),
        (16, Some(1), Some(5), 5, Some(4), "11/5", Some("4"), ORD, Some(("5/2", N_ORD))),
        (17, None, None, 5, None, "13/5", None, NORCR, Some(("13/5", N_OVER))),
        (18, Some(0), Some(6), 6, Some(5), "5/2", Some("16/5"), ORD, Some(("3", N_ORD))),
        (19, Some(1), Some(6), 6, Some(5), "8/3", Some("4"), ORD, Some(("3", N_ORD))),
        (20, Some(2), Some(6), 6, Some(5), "3", Some("5"), ORD, Some(("3", N_ORD))),
    ];
    check_table(3, 10, 20, &k3);

    assert_elapsed(t0, 1, "table reproduction");
}

#[test]
fn a02_candidate_exponents_match_every_settled_listing() {
    // (k, m, candidate eta, verdict, settled nature). The candidate must
    // equal the settled exponent exactly, so reciprocal * eta = 1.
    let listings: [(u32, u64, &str, ClassKind, Nature); 16] = [
        (2, 8, "1/2", TIE, N_OVER),
        (2, 10, "4/9", OVER, N_OVER),
        (2, 11, "2/5", ORD, N_ORD),
        (2, 12, "5/13", OVER, N_OVER),
        (2, 13, "1/3", ORD, N_ORD),
        (2, 15, "2/7", TIE, N_OVER),
        (2, 16, "2/7", ORD, N_ORD),
        (2, 17, "7/27", OVER, N_OVER),
        (2, 18, "1/4", ORD, N_ORD),
        (2, 20, "2/9", ORD, N_ORD),
        (3, 11, "1/2", NORCR, N_OVER),
        (3, 14, "4/9", NORCR, N_OVER),
        (3, 15, "2/5", ORD, N_ORD),
        (3, 17, "5/13", NORCR, N_OVER),
        (3, 18, "1/3", ORD, N_ORD),
        (3, 19, "1/3", ORD, N_ORD),
    ];
    let one = Rational::from_u64(1);
    for (k, m, eta, kind, nature) in listings {
        let c = classify(k, m).unwrap();
        let at = format!("k={k} m={m}");
        assert_eq!(c.exponent, rat(eta), "exponent at {at}");
        assert_eq!(c.kind, kind, "verdict at {at}");
        let settled = c.proven.unwrap_or_else(|| panic!("no settled entry at {at}"));
        assert_eq!(settled.nature, nature, "nature at {at}");
        assert_eq!(
            &settled.reciprocal_exponent * &c.exponent,
            one,
            "settled reciprocal disagrees with the candidate at {at}"
        );
    }
}

#[test]
fn a03_candidate_selection_scan_pins_the_open_cases() {
    let t0 = Instant::now();
    let rows = scan_inequalities(ScanMode::PropRcr, 2, 3..=100).unwrap();

    // m = 3 is the lone row where no critical remainder exists at k = 2.
    assert_eq!(rows[0].m, 3);
    assert_eq!(rows[0].holds, None, "m=3 must be inapplicable");

    let failures: Vec<u64> = rows
        .iter()
        .filter(|r| r.holds == Some(false))
        .map(|r| r.m)
        .collect();
    assert_eq!(
        failures,
        vec![4, 5, 6, 7, 9, 11, 13, 14, 16, 18, 20, 22, 27, 29, 31, 33, 44, 46],
        "full failure set up to 100"
    );

    let odd_high: Vec<u64> = failures
        .iter()
        .copied()
        .filter(|m| m % 2 == 1 && *m >= 15)
        .collect();
    assert_eq!(odd_high, vec![27, 29, 31, 33], "odd failures at 15 or above");

    let even_high: Vec<u64> = failures
        .iter()
        .copied()
        .filter(|m| m % 2 == 0 && *m >= 24)
        .collect();
    assert_eq!(even_high, vec![44, 46], "even failures at 24 or above");

    assert_eq!(
        remaining_unknown(2, 100).unwrap(),
        vec![22, 27, 29, 31, 33, 44, 46],
        "failures with no settled exponent on record"
    );
    assert_elapsed(t0, 1, "candidate-selection scan");
}

#[test]
fn a04_braid_densities_follow_the_two_case_formula() {
    let t0 = Instant::now();
    for ell in 2..=6u64 {
        for r in 0..=ell {
            for t in 1..=5u64 {
                let spec = BraidSpec::new(ell, r, t).unwrap();
                let g = braid(&spec).unwrap();
                let expected = if ell >= r * (r + 1) {
                    // A single clique is the densest subgraph.
                    Rational::new(ell as i64, 2).unwrap()
                } else {
                    // Density grows with the block count: the whole braid wins.
                    let num = t * ell * (ell - 1) / 2 + (t - 1) * (r + 1) * r / 2;
                    Rational::new(num as i64, (t * ell - 1) as i64).unwrap()
                };
                let at = format!("braid(ell={ell}, r={r}, t={t})");
                assert_eq!(max_density(&g).unwrap(), expected, "{at}");
                if t * ell <= 14 {
                    // Independent confirmation by full subgraph enumeration.
                    assert_eq!(exhaustive_density(&g).unwrap(), expected, "oracle {at}");
                }
            }
        }
    }
    assert_elapsed(t0, 60, "braid density sweep");
}

#[test]
fn a05_power_path_decompositions_partition_every_edge() {
    let t0 = Instant::now();
    for k in 1..=3u32 {
        for ell in 2..=4u64 {
            for r in 1..=ell {
                for t in 1..=4u64 {
                    let d = decompose_power_path(k, ell, r, t).unwrap();
                    let at = format!("(k={k}, ell={ell}, r={r}, t={t})");
                    assert!(d.verified, "partition failed at {at}");
                    assert_eq!(u64::from(d.n), (u64::from(k) + 1) * t * ell, "n at {at}");
                    assert_eq!(d.m, u64::from(k) * ell + r, "m at {at}");
                    assert_eq!(
                        d.braid_edge_sets.len(),
                        k as usize + 1,
                        "braid copy count at {at}"
                    );
                }
            }
        }
    }

    // Pinned instance: 108 host edges split as 81 blow-up plus three 9s.
    let d = decompose_power_path(2, 3, 2, 2).unwrap();
    assert!(d.verified);
    assert_eq!(d.blowup_edges.len(), 81);
    let braid_sizes: Vec<usize> = d.braid_edge_sets.iter().map(Vec::len).collect();
    assert_eq!(braid_sizes, vec![9, 9, 9]);
    let host_edges = power_path(d.n, d.m).unwrap().edge_count();
    assert_eq!(host_edges, 108u64);
    assert_eq!(
        (d.blowup_edges.len() + braid_sizes.iter().sum::<usize>()) as u64,
        host_edges
    );
    assert_elapsed(t0, 10, "decomposition sweep");
}

struct RewireInstance {
    k: u32,
    m: u64,
    l: u32,
    v0: Vec<usize>,
}

/// Deterministic instance stream shared by the rewiring and bound suites:
/// two splitmix words per index fix the shape (k <= 3, m <= 8, l <= 60)
/// and the marked set, so any failure is reproducible from its index.
fn seeded_instances(count: u64) -> Vec<RewireInstance> {
    const SEED: u64 = 0x00c0_ffee;
    (0..count)
        .map(|i| {
            let w0 = mix64(SEED, 2 * i);
            let w1 = mix64(SEED, 2 * i + 1);
            let k = (w0 % 3) as u32 + 1;
            let m = (w0 >> 8) % 8 + 1;
            let l = ((w0 >> 16) % 59 + 2) as u32;
            let mut v0: Vec<usize> = (0..l as usize).filter(|&pos| (w1 >> pos) & 1 == 1).collect();
            if v0.is_empty() {
                // Keep the marked set nonempty so rewiring has an anchor.
                v0.push(l as usize / 2);
            }
            RewireInstance { k, m, l, v0 }
        })
        .collect()
}

#[test]
fn a06_rewiring_certificates_hold_on_ten_thousand_seeded_instances() {
    let t0 = Instant::now();
    for (idx, inst) in seeded_instances(10_000).iter().enumerate() {
        let at = format!("instance {idx} (m={} l={} |v0|={})", inst.m, inst.l, inst.v0.len());
        let path = LabeledPowerPath::unlabeled(inst.m, inst.l).unwrap();
        let out = rewire(&path, &inst.v0).unwrap_or_else(|e| panic!("{at}: {e}"));
        let cert = &out.certificate;
        assert_eq!(cert.conditions(), [true; 4], "{at}");
        assert!(
            cert.edge_count_after() <= cert.edge_count_before(),
            "{at}: rewiring added edges"
        );
        assert!(cert.is_valid(), "{at}: {}", out.certificate_json());
        let mut order = out.order.clone();
        order.sort_unstable();
        assert!(
            order.iter().copied().eq(0..inst.l),
            "{at}: output order is not a permutation"
        );
    }
    assert_elapsed(t0, 60, "rewiring certificate suite");
}

#[test]
fn a07_weak_bound_holds_and_the_k1_bound_survives_exhaustion() {
    let t0 = Instant::now();

    // Part one: the marked-set bound on every seeded instance where it
    // applies (m > k for the threshold, marked share at least 1/(k+1)).
    let mut checked = 0u64;
    for inst in seeded_instances(10_000) {
        if inst.m <= u64::from(inst.k) {
            continue;
        }
        if (u64::from(inst.k) + 1) * (inst.v0.len() as u64) < u64::from(inst.l) {
            continue;
        }
        let path = LabeledPowerPath::unlabeled(inst.m, inst.l).unwrap();
        let outcome = bound_check(
            &path,
            BoundVariant::Weak {
                k: inst.k,
                v0: &inst.v0,
            },
        )
        .unwrap();
        assert!(
            outcome.holds,
            "k={} m={} l={} |v0|={}: {} under {}",
            inst.k,
            inst.m,
            inst.l,
            inst.v0.len(),
            outcome.lhs,
            outcome.rhs
        );
        checked += 1;
    }
    assert!(
        checked >= 2_000,
        "only {checked} instances met the share precondition"
    );

    // Part two: the k = 1 bipartition bound, exhausted over every
    // labeling of short hosts. minimum >= f(ell) L - 2 m^2.
    for m in 2..=5u64 {
        let ell = ell_argmin(1, m).unwrap();
        let f_ell = f_at_int(1, m, ell).unwrap();
        for l in 1..=16u64 {
            let res = min_partition_edges(l, m, 1).unwrap();
            let lhs = Rational::from_u64(res.minimum);
            let rhs = &(&f_ell * &Rational::from_u64(l)) - &Rational::from_u64(2 * m * m);
            assert!(
                lhs >= rhs,
                "m={m} L={l}: exhaustive minimum {lhs} under bound {rhs}"
            );
        }
    }
    assert_elapsed(t0, 300, "weak bound suite");
}

#[test]
fn a08_slope_constants_are_exact_and_ordinary_cases_stay_above() {
    let t0 = Instant::now();
    let exact: [(u32, u64, u32, &str); 6] = [
        (2, 12, 6, "13/5"),
        (2, 15, 7, "7/2"),
        (2, 17, 8, "27/7"),
        (3, 17, 6, "13/5"),
        (2, 10, 5, "9/4"),
        (3, 14, 5, "9/4"),
    ];
    for (k, m, s, slope) in exact {
        let b = zero_statement_slope(k, m, s).unwrap();
        assert_eq!(b.slope, rat(slope), "slope at (k={k}, m={m}, s={s})");
    }

    let strictly_above: [(u32, u64, u32, &str); 7] = [
        (2, 11, 5, "5/2"),
        (2, 13, 6, "3"),
        (2, 16, 7, "7/2"),
        (2, 18, 8, "4"),
        (2, 20, 9, "9/2"),
        (3, 15, 5, "5/2"),
        (3, 18, 6, "3"),
    ];
    for (k, m, s, floor) in strictly_above {
        let b = zero_statement_slope(k, m, s).unwrap();
        assert!(
            b.slope > rat(floor),
            "slope {} at (k={k}, m={m}, s={s}) is not above {floor}",
            b.slope
        );
    }
    assert_elapsed(t0, 5, "slope constants");
}

#[test]
fn a09_far_position_censuses_match_the_frozen_counts() {
    let t0 = Instant::now();
    let censuses: [(u32, u64, u32, u32, u64); 9] = [
        (2, 13, 6, 4, 2),
        (2, 18, 8, 5, 4),
        (2, 20, 9, 5, 6),
        (2, 20, 9, 6, 3),
        (2, 10, 5, 3, 2),
        (3, 14, 5, 3, 3),
        (3, 17, 6, 3, 6),
        (2, 15, 7, 4, 4),
        (2, 17, 8, 4, 6),
    ];
    for (k, m, s, i, want) in censuses {
        assert_eq!(
            segment_far_minimum(k, m, s, i).unwrap(),
            want,
            "census at (k={k}, m={m}, s={s}, i={i})"
        );
    }
    assert_elapsed(t0, 1, "far-position censuses");
}

#[test]
fn a10_pell_families_yield_integral_thresholds() {
    for (k, p, q, m) in [(2u32, 2u64, 9u64, 4u64), (3, 3, 19, 9)] {
        let sols = pell_integer_lambdas(k, 4).unwrap();
        assert!(
            sols.iter().any(|s| {
                s.p == BigUint::from(p) && s.q == BigUint::from(q) && s.m == BigUint::from(m)
            }),
            "(p={p}, q={q}, m={m}) missing from the first solutions at k={k}"
        );
    }
    // Every returned solution must solve the Pell equation and make the
    // threshold parameter integral: p^2 (k^2 + 1) = m (m + 1).
    for k in 1..=4u32 {
        let k2p1 = BigUint::from(k * k + 1);
        let four = BigUint::from(4u32);
        let one = BigUint::from(1u32);
        for s in pell_integer_lambdas(k, 4).unwrap() {
            assert_eq!(
                &s.q * &s.q,
                &four * &k2p1 * &s.p * &s.p + &one,
                "Pell equation fails at k={k}, p={}",
                s.p
            );
            assert_eq!(
                &s.p * &s.p * &k2p1,
                &s.m * (&s.m + &one),
                "threshold is not integral at k={k}, m={}",
                s.m
            );
        }
    }
}

#[test]
fn a11_wide_range_scans_hold_across_the_proof_windows() {
    let t0 = Instant::now();

    // Additive bracket: a 301-point window starting at 30 k^3.
    for k in 1..=3u32 {
        let base = 30 * u64::from(k).pow(3);
        for row in scan_inequalities(ScanMode::FactAd, k, base..=base + 300).unwrap() {
            assert_eq!(row.holds, Some(true), "additive bracket at k={k} m={}", row.m);
        }
    }

    // Reciprocal difference: asserted from 6 k^2 up to 2000, surds
    // compared exactly. Below 6 k^2 the scan reports, never asserts.
    for k in 1..=4u32 {
        let start = 6 * u64::from(k) * u64::from(k);
        for row in scan_inequalities(ScanMode::FactDiff, k, start..=2000).unwrap() {
            assert_eq!(
                row.holds,
                Some(true),
                "reciprocal difference at k={k} m={}",
                row.m
            );
            match &row.witness {
                ScanWitness::FactDiff { in_proof_range, .. } => {
                    assert!(in_proof_range, "k={k} m={} should be in range", row.m)
                }
                other => panic!("unexpected witness {other:?}"),
            }
        }
        let below = scan_inequalities(ScanMode::FactDiff, k, (u64::from(k) + 1)..=start - 1).unwrap();
        let violations = below.iter().filter(|r| r.holds == Some(false)).count();
        println!(
            "below the proof window at k={k}: {violations} of {} rows exceed the bound",
            below.len()
        );
    }
    assert_elapsed(t0, 30, "wide-range scans");
}

#[test]
fn a12_random_lab_matches_its_exact_first_moments() {
    // The sampling probability 251/10000 approximates 60^(-9/10) to
    // within 10^-6: proved exactly by tenth powers, no floating point.
    let p = rat("251/10000");
    let tol = rat("1/1000000");
    let lo = &p - &tol;
    let hi = &p + &tol;
    let sixty_ninth = rpow(&Rational::from_u64(60), 9);
    let one = Rational::from_u64(1);
    assert!(
        &rpow(&lo, 10) * &sixty_ninth < one,
        "window floor is not below the target"
    );
    assert!(
        &rpow(&hi, 10) * &sixty_ninth > one,
        "window ceiling is not above the target"
    );

    // Triangle counts at that p: the exact first moment is C(60,3) p^3,
    // and the empirical mean must sit within three sample sigmas.
    let report = clique_experiment(60, 3, &p, 200, 7).unwrap();
    assert_eq!(report.expected_mean, &Rational::from_u64(34220) * &rpow(&p, 3));
    assert!(
        report.within_band,
        "mean {} strayed from {} (variance {})",
        report.mean, report.expected_mean, report.variance
    );

    // Coupled seeds: raising p with the seed fixed only adds edges.
    for j in 0..100i64 {
        let p1 = Rational::new(j, 200).unwrap();
        let p2 = Rational::new(j + 50, 200).unwrap();
        let g1 = gnp(60, &p1, j as u64).unwrap();
        let g2 = gnp(60, &p2, j as u64).unwrap();
        assert!(g1.edge_count() <= g2.edge_count(), "seed {j}");
        for (u, v) in g1.edges() {
            assert!(g2.has_edge(u, v), "seed {j}: edge ({u},{v}) vanished as p grew");
        }
    }

    // Degree floor of the deterministic gadget across a small grid.
    let grid: [(u32, u32, &str); 7] = [
        (6, 1, "1/4"),
        (20, 1, "1/5"),
        (9, 2, "1/10"),
        (12, 2, "1/8"),
        (60, 2, "1/30"),
        (12, 3, "1/13"),
        (16, 3, "1/17"),
    ];
    for (n, k, eps) in grid {
        let spec = GadgetSpec::new(n, k, rat(eps)).unwrap();
        let g = posa_gadget(&spec).unwrap();
        let need = spec.required_min_degree();
        let min_degree = (0..g.n()).map(|v| g.degree(v) as u64).min().unwrap();
        assert!(
            min_degree >= need,
            "gadget (n={n}, k={k}, eps={eps}): degree {min_degree} under {need}"
        );
    }
}
