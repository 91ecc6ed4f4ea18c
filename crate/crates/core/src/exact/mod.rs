//! Exact arithmetic: arbitrary-precision rationals, quadratic surds, and
//! binomial coefficients.
//!
//! Everything verdict-bearing in this crate runs on these types; floating
//! point is banned from any code path that decides an inequality. Surds are
//! kept in the canonical form `a + b*sqrt(d)` with `d` square-free, so that
//! two representations of the same real number are structurally equal and
//! comparisons reduce to integer sign analysis.

mod rational;
mod surd;

pub use rational::Rational;
pub use surd::Surd;

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Binomial coefficient `C(n, k)` by the multiplicative formula.
///
/// Exact for all inputs; the running product is divided step by step, which
/// stays integral because `C(n, i)` is.
pub fn binom(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// `C(n, 2)` as a plain u64; callers guarantee `n(n-1)/2` fits.
pub fn binom2(n: u64) -> u64 {
    n * (n - 1) / 2
}

/// Real extension `x(x-1)/2` of `C(x, 2)` used by the profile function at
/// rational arguments.
pub fn binom2_rational(x: &Rational) -> Rational {
    let one = Rational::from_i64(1);
    let two = Rational::from_i64(2);
    x.clone() * (x.clone() - one) / two
}
