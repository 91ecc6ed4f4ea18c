//! The obstruction-density function f_{k,m} and its exact minimizers.
//!
//! For a decomposition m = k·x + r (r >= 0) the value f(x) =
//! (C(x,2) + C(r+1,2)) / x is the limiting edge density of the braid gadgets
//! obstructing m-th powers of Hamilton cycles. Its real minimizer is
//! lambda = sqrt(m(m+1)/(k^2+1)); the integer minimizer ell over
//! {1, ..., floor(m/k)} drives every threshold classification here. All
//! values are exact rationals or surds.

use num_bigint::BigInt;

use crate::error::Error;
use crate::exact::{binom2_rational, Rational, Surd};

/// Shared precondition of the calculus: k >= 1 and m > k.
pub(crate) fn check_km(k: u32, m: u64) -> Result<(), Error> {
    if k == 0 {
        return Err(Error::domain("k must be at least 1"));
    }
    if m <= u64::from(k) {
        return Err(Error::domain(format!("m must exceed k; got k={k}, m={m}")));
    }
    Ok(())
}

/// m(m+1)(k^2+1), the radicand shared by lambda and f(lambda).
fn lambda_radicand(k: u32, m: u64) -> Result<u64, Error> {
    let kk = u128::from(k) * u128::from(k) + 1;
    let rad = u128::from(m) * (u128::from(m) + 1) * kk;
    u64::try_from(rad).map_err(|_| {
        Error::resource(format!(
            "radicand m(m+1)(k^2+1) for k={k}, m={m} exceeds 64 bits"
        ))
    })
}

/// Evaluates f_{k,m} at a rational point of the open real domain (0, m).
///
/// Binomials extend to the reals as y(y-1)/2; the second term is clamped to
/// zero when its argument m - kx + 1 is negative (only reachable for k >= 2
/// at x > (m+1)/k).
pub fn f_eval(k: u32, m: u64, x: &Rational) -> Result<Rational, Error> {
    check_km(k, m)?;
    if !x.is_positive() || *x >= Rational::from_u64(m) {
        return Err(Error::domain(format!(
            "f is defined on (0, {m}); got x = {x}"
        )));
    }
    let y = &(&Rational::from_u64(m) - &(x * &Rational::from_u64(u64::from(k))))
        + &Rational::one();
    let second = if y.is_negative() {
        Rational::zero()
    } else {
        binom2_rational(&y)
    };
    Ok(&(&binom2_rational(x) + &second) / x)
}

/// f_{k,m} at an integer point x in [1, m], with the same clamp rule.
///
/// Unlike [`f_eval`] this admits x = m (needed at k = 1, where the integer
/// argmin can be m itself, e.g. ell_{1,2} = 2).
pub fn f_at_int(k: u32, m: u64, x: u64) -> Result<Rational, Error> {
    check_km(k, m)?;
    if x == 0 || x > m {
        return Err(Error::domain(format!(
            "integer evaluation point {x} outside [1, {m}]"
        )));
    }
    let y = i128::from(m) - i128::from(k) * i128::from(x) + 1;
    let binom2 = |n: u128| n * n.saturating_sub(1) / 2;
    let second = if y < 0 { 0 } else { binom2(y as u128) };
    let numer = binom2(u128::from(x)) + second;
    Ok(Rational::from_big(BigInt::from(numer), BigInt::from(x)))
}

/// lambda_{k,m} = sqrt(m(m+1)/(k^2+1)) together with
/// f(lambda) = sqrt((k^2+1)(m^2+m)) - (2m+1)k/2 - 1/2, both exact.
///
/// When lambda is an integer both surds collapse to rational form.
pub fn lambda_profile(k: u32, m: u64) -> Result<(Surd, Surd), Error> {
    check_km(k, m)?;
    let rad = lambda_radicand(k, m)?;
    let kk = Rational::from_u64(u64::from(k) * u64::from(k) + 1);
    let lambda = Surd::sqrt_u64(rad).mul_rational(&kk.recip()?);
    let shift = Rational::from_big(
        -BigInt::from((2 * u128::from(m) + 1) * u128::from(k) + 1),
        BigInt::from(2),
    );
    let f_lambda = Surd::sqrt_u64(rad).add_rational(&shift);
    Ok((lambda, f_lambda))
}

fn isqrt_u128(n: u128) -> u128 {
    if n < 2 {
        return n;
    }
    // Newton iteration from a power-of-two seed; converges to floor(sqrt n).
    let mut x = 1u128 << (n.ilog2() / 2 + 1);
    loop {
        let y = (x + n / x) / 2;
        if y >= x {
            break;
        }
        x = y;
    }
    x
}

/// floor(lambda_{k,m}) and whether lambda is exactly integral, decided by
/// the integer inequality t^2 (k^2+1) <= m(m+1).
pub(crate) fn lambda_floor(k: u32, m: u64) -> (u64, bool) {
    let kk = u128::from(k) * u128::from(k) + 1;
    let target = u128::from(m) * (u128::from(m) + 1);
    let mut t = isqrt_u128(target / kk);
    while (t + 1) * (t + 1) * kk <= target {
        t += 1;
    }
    while t * t * kk > target {
        t -= 1;
    }
    (t as u64, t * t * kk == target)
}

/// The smallest integer minimizing f_{k,m} over decompositions
/// {1, ..., floor(m/k)}; by convexity it lies in {floor(lambda), ceil(lambda)}
/// (capped at floor(m/k)), and ties resolve to the smaller point.
pub fn ell_argmin(k: u32, m: u64) -> Result<u64, Error> {
    check_km(k, m)?;
    let cap = m / u64::from(k);
    let (lo, integral) = lambda_floor(k, m);
    debug_assert!((1..=cap).contains(&lo), "floor(lambda) must lie in [1, m/k]");
    if integral {
        return Ok(lo);
    }
    let hi = (lo + 1).min(cap);
    if hi == lo {
        return Ok(lo);
    }
    if f_at_int(k, m, lo)? <= f_at_int(k, m, hi)? {
        Ok(lo)
    } else {
        Ok(hi)
    }
}
