//! Clique-count statistics over seeded G(n, p) trials.
//!
//! Each trial draws its own graph from a per-trial seed and counts the
//! s-vertex cliques exactly. The report compares the empirical mean against
//! the exact first moment C(n, s) * p^C(s, 2) and carries the unbiased
//! sample variance, all as rationals: the acceptance band is three sample
//! standard errors wide, never a fixed tolerance, because at desk scale
//! only the seeded stream itself is reproducible.

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{binom, binom2, Rational};
use crate::graph::clique_count;

use super::gnp::{check_probability, gnp};
use super::rng::mix64;

/// Experiment caps. Counting 6-cliques in dense 200-vertex graphs is
/// already minutes of work; anything larger is not a desk experiment.
pub const MAX_EXPERIMENT_VERTICES: u32 = 200;
pub const MAX_EXPERIMENT_CLIQUE: u32 = 6;
pub const MAX_EXPERIMENT_TRIALS: u64 = 100_000;

/// Everything a clique experiment produced, inputs echoed.
///
/// Bit-exact reproducible: trial t draws G(n, p) with seed
/// `mix64(seed, t)`, so the whole report is a pure function of its inputs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleReport {
    pub seed: u64,
    pub n: u32,
    pub s: u32,
    pub p: Rational,
    pub trials: u64,
    /// Clique count per trial, indexed by trial number.
    pub counts: Vec<u64>,
    /// Empirical mean of the counts.
    pub mean: Rational,
    /// Unbiased sample variance (zero when there are fewer than two trials).
    pub variance: Rational,
    /// The exact first moment C(n, s) * p^C(s, 2).
    pub expected_mean: Rational,
    /// Whether the mean sits within three sample standard errors of the
    /// expectation: (mean - expected)^2 * trials <= 9 * variance, compared
    /// exactly in squared form.
    pub within_band: bool,
}

/// Count s-cliques across `trials` independent seeded draws of G(n, p).
///
/// Trials are independent, so they run in parallel; each takes its seed
/// from the trial index, which keeps the report identical no matter the
/// schedule or thread count.
pub fn clique_experiment(
    n: u32,
    s: u32,
    p: &Rational,
    trials: u64,
    seed: u64,
) -> Result<SampleReport> {
    check_probability(p)?;
    if s == 0 {
        return Err(Error::domain("clique statistics need s >= 1"));
    }
    if trials == 0 {
        return Err(Error::domain("at least one trial is required"));
    }
    if n > MAX_EXPERIMENT_VERTICES {
        return Err(Error::resource(format!(
            "clique experiments stop at {MAX_EXPERIMENT_VERTICES} vertices, got {n}"
        )));
    }
    if s > MAX_EXPERIMENT_CLIQUE {
        return Err(Error::resource(format!(
            "clique experiments stop at s = {MAX_EXPERIMENT_CLIQUE}, got {s}"
        )));
    }
    if trials > MAX_EXPERIMENT_TRIALS {
        return Err(Error::resource(format!(
            "clique experiments stop at {MAX_EXPERIMENT_TRIALS} trials, got {trials}"
        )));
    }

    let counts: Vec<u64> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let g = gnp(n, p, mix64(seed, t))?;
            clique_count(&g, s)
        })
        .collect::<Result<_>>()?;

    let (mean, variance) = moments(&counts);
    let expected_mean =
        Rational::from(binom(u64::from(n), u64::from(s))) * pow(p, binom2(u64::from(s)));

    // |mean - mu| <= 3 * sqrt(variance / trials), squared to stay rational.
    let deviation = mean.clone() - expected_mean.clone();
    let within_band = deviation.square() * Rational::from_u64(trials)
        <= Rational::from_u64(9) * variance.clone();

    Ok(SampleReport {
        seed,
        n,
        s,
        p: p.clone(),
        trials,
        counts,
        mean,
        variance,
        expected_mean,
        within_band,
    })
}

/// Exact mean and unbiased sample variance of a nonempty sample:
/// mean = S1/T, variance = (T*S2 - S1^2) / (T*(T-1)).
fn moments(counts: &[u64]) -> (Rational, Rational) {
    let t = BigInt::from(counts.len());
    let s1: BigInt = counts.iter().map(|&x| BigInt::from(x)).sum();
    let s2: BigInt = counts
        .iter()
        .map(|&x| {
            let b = BigInt::from(x);
            &b * &b
        })
        .sum();
    let mean = Rational::from_big(s1.clone(), t.clone());
    let variance = if counts.len() >= 2 {
        Rational::from_big(&t * &s2 - &s1 * &s1, &t * (&t - BigInt::from(1)))
    } else {
        Rational::zero()
    };
    (mean, variance)
}

/// p^e by repeated multiplication; exponents here are at most C(6, 2) = 15.
fn pow(base: &Rational, exp: u64) -> Rational {
    let mut out = Rational::one();
    for _ in 0..exp {
        out = out * base.clone();
    }
    out
}
