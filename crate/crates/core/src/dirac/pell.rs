//! Window sizes with an integral balance point.
//!
//! lambda_{k,m} is integral exactly when m(m+1) = (k^2+1)p^2 for some
//! integer p, equivalently q^2 - 4(k^2+1)p^2 = 1 with q = 2m+1: a Pell
//! equation in (q, p). Solutions are generated from the fundamental one by
//! the standard composition recurrence.

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One positive solution of q^2 - 4(k^2+1)p^2 = 1, with the window size
/// m = (q-1)/2 it induces. lambda_{k,m} = p for that window.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PellSolution {
    pub p: BigUint,
    pub q: BigUint,
    pub m: BigUint,
}

/// First `count` positive solutions ordered by p.
///
/// p = k always solves the equation (q = 2k^2+1, m = k^2), so the
/// fundamental solution has p <= k and a bounded upward search finds it.
pub fn pell_integer_lambdas(k: u32, count: u32) -> Result<Vec<PellSolution>> {
    if k < 1 {
        return Err(Error::domain("pell_integer_lambdas requires k >= 1"));
    }
    if count < 1 {
        return Err(Error::domain("pell_integer_lambdas requires count >= 1"));
    }
    let d: u128 = 4 * ((k as u128) * (k as u128) + 1);

    let mut fundamental = None;
    for p in 1..=(k as u128) {
        let rhs = 1 + d * p * p;
        let q = isqrt_u128(rhs);
        if q * q == rhs {
            fundamental = Some((BigUint::from(q), BigUint::from(p)));
            break;
        }
    }
    // p = k is a witness, so the search cannot come back empty.
    let (q1, p1) = fundamental.ok_or_else(|| Error::internal("pell fundamental search failed"))?;

    let d = BigUint::from(d);
    let one = BigUint::one();
    let two = BigUint::from(2u32);
    let mut out = Vec::with_capacity(count as usize);
    let (mut q, mut p) = (q1.clone(), p1.clone());
    for _ in 0..count {
        // q is odd: q^2 = 1 + 4(..) == 1 (mod 4). So m is integral.
        debug_assert!((&q % &two) == one);
        let m = (&q - &one) / &two;
        debug_assert_eq!(&q * &q, &one + &d * &p * &p);
        // m(m+1) = (k^2+1) p^2, i.e. lambda_{k,m} = p exactly.
        debug_assert_eq!(&m * (&m + &one) * 4u32, &d * &p * &p);
        out.push(PellSolution {
            p: p.clone(),
            q: q.clone(),
            m,
        });
        let next_q = &q1 * &q + &d * &p1 * &p;
        let next_p = &p1 * &q + &q1 * &p;
        q = next_q;
        p = next_p;
    }
    Ok(out)
}

fn isqrt_u128(n: u128) -> u128 {
    if n < 2 {
        return n;
    }
    // Newton from a power-of-two seed >= sqrt(n); no floating point.
    let mut x = 1u128 << (n.ilog2() / 2 + 1);
    loop {
        let y = (x + n / x) / 2;
        if y >= x {
            return x;
        }
        x = y;
    }
}
