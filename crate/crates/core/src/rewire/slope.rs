//! Per-position floors on forced class-local edges, certified by dual
//! multipliers.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::Rational;

use super::far::segment_far_minimum;
use super::lp::LinearProgram;

/// A per-position edge floor together with its certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlopeBound {
    /// Forced class-local edges per position, in the long-path limit.
    pub slope: Rational,
    /// Dual multipliers certifying the slope: one per census floor in
    /// increasing far distance, then one per coupling row in increasing
    /// partner distance. Empty when the spanning estimate alone already
    /// gives the slope.
    pub multipliers: Vec<Rational>,
}

/// Builds the census program for `K_s`-free classes at power
/// `m = k(s-1) + h`. `None` when there are no census variables, i.e.
/// when `h = s - 2` leaves no far distance strictly between the spanning
/// reach and the clique cap.
fn census_program(k: u32, m: u64, s: u32) -> Result<(u64, Option<LinearProgram>)> {
    if k == 0 || s < 2 {
        return Err(Error::domain("slope needs k >= 1 and s >= 2"));
    }
    let span = (k as u64)
        .checked_mul(s as u64 - 1)
        .ok_or_else(|| Error::domain("k(s-1) overflows"))?;
    if m <= span {
        return Err(Error::domain(
            "infeasible parameters: m = k(s-1)+h needs h >= 1",
        ));
    }
    let h = m - span;
    if h + 2 > s as u64 {
        return Err(Error::domain(
            "infeasible parameters: a window of m+1 positions cannot stay clique-free",
        ));
    }
    // census variables: far counts at distances h+1 ..= s-2, scaled by L
    let vars: Vec<u64> = (h + 1..=s as u64 - 2).collect();
    if vars.is_empty() {
        return Ok((h, None));
    }
    if vars.len() > 6 {
        return Err(Error::resource(
            "slope program capped at six census variables",
        ));
    }
    let n = vars.len();
    let mut rows = Vec::with_capacity(2 * n - 1);
    let mut rhs = Vec::with_capacity(2 * n - 1);
    // census floors: xi_i >= z_i / (m + 1 - i)
    for (idx, &i) in vars.iter().enumerate() {
        let z = segment_far_minimum(k, m, s, i as u32)?;
        let mut row = vec![Rational::zero(); n];
        row[idx] = Rational::one();
        rows.push(row);
        rhs.push(Rational::from_u64(z) / Rational::from_u64(m + 1 - i));
    }
    // couplings: xi_{h+1} + (h+1)/(s-1-j) xi_j >= 1
    for (idx, &j) in vars.iter().enumerate().skip(1) {
        let mut row = vec![Rational::zero(); n];
        row[0] = Rational::one();
        row[idx] = Rational::from_u64(h + 1) / Rational::from_u64(s as u64 - 1 - j);
        rows.push(row);
        rhs.push(Rational::one());
    }
    Ok((h, Some(LinearProgram { rows, rhs, nvars: n })))
}

/// Lower bound on forced class-local edges per position for `K_s`-free
/// classes at power `m = k(s-1) + h`.
///
/// Spanning walks contribute `h` edges per position; the census floors
/// and the coupling rows add the optimum of a small exact program on
/// top. The reported multipliers certify that optimum: they are
/// nonnegative, their weighted row sums stay at most 1 per census
/// variable, and their weighted floor sum equals `slope - h`. Checking
/// those three facts takes only rational arithmetic, no solver.
pub fn zero_statement_slope(k: u32, m: u64, s: u32) -> Result<SlopeBound> {
    let (h, program) = census_program(k, m, s)?;
    match program {
        None => Ok(SlopeBound {
            slope: Rational::from_u64(h),
            multipliers: vec![],
        }),
        Some(lp) => {
            let sol = lp.solve()?;
            Ok(SlopeBound {
                slope: Rational::from_u64(h) + sol.value,
                multipliers: sol.multipliers,
            })
        }
    }
}
