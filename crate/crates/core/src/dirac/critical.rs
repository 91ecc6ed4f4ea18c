//! Critical decomposition parameters r_cr, ell_cr, ell*.
//!
//! r_cr(k,m) is the largest r >= 0 such that (m-r)/k is an integer at least
//! r(r+1); it selects the decomposition m = k·ell_cr + r_cr whose blow-up
//! bound 2/ell_cr competes against the braid bound 1/f(ell*). The parameter
//! need not exist; absence is exactly characterized by the residue condition
//! tested in [`r_cr_absent_by_characterization`].

use crate::error::Error;

use super::threshold::{check_km, f_at_int};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CriticalParams {
    pub r_cr: Option<u64>,
    pub ell_cr: Option<u64>,
    pub ell_star: Option<u64>,
}

/// Computes (r_cr, ell_cr, ell*). All three are absent together when no
/// residue-class candidate satisfies (m-r)/k >= r(r+1); ell* additionally
/// requires a nonempty range {max(r_cr,1), ..., ell_cr - 1}.
pub fn critical_params(k: u32, m: u64) -> Result<CriticalParams, Error> {
    check_km(k, m)?;
    let k64 = u64::from(k);
    // Candidates r = m mod k, m mod k + k, ...: (m-r)/k shrinks while r(r+1)
    // grows, so the valid candidates form a prefix ending at r_cr.
    let mut r_cr = None;
    let mut r = m % k64;
    while r <= m {
        let ell = (m - r) / k64;
        if u128::from(ell) < u128::from(r) * (u128::from(r) + 1) {
            break;
        }
        r_cr = Some(r);
        r += k64;
    }
    let Some(r_cr) = r_cr else {
        return Ok(CriticalParams {
            r_cr: None,
            ell_cr: None,
            ell_star: None,
        });
    };
    let ell_cr = (m - r_cr) / k64;
    // Smallest minimizer of f over {max(r_cr,1), ..., ell_cr - 1}; the lower
    // end is lifted to 1 because f is undefined at 0.
    let lo = r_cr.max(1);
    let mut ell_star = None;
    if ell_cr >= 1 && lo <= ell_cr - 1 {
        let mut best = None;
        for x in lo..ell_cr {
            let v = f_at_int(k, m, x)?;
            let better = match &best {
                None => true,
                Some(b) => v < *b,
            };
            if better {
                best = Some(v);
                ell_star = Some(x);
            }
        }
    }
    Ok(CriticalParams {
        r_cr: Some(r_cr),
        ell_cr: Some(ell_cr),
        ell_star,
    })
}

/// Closed-form absence test: r_cr(k,m) fails to exist exactly when
/// m ≡ s (mod k) for some 1 <= s <= k-1 with m < k·s·(s+1) + s.
pub fn r_cr_absent_by_characterization(k: u32, m: u64) -> bool {
    let s = m % u64::from(k);
    s >= 1 && m < u64::from(k) * s * (s + 1) + s
}
