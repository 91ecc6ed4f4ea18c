//! Grid scans over m for the three side inequalities the calculus relies on.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{Rational, Surd};

use super::critical::critical_params;
use super::known::known_lookup;
use super::threshold::{check_km, ell_argmin, f_at_int, lambda_profile};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ScanMode {
    /// m/(k+1) <= ell_{k,m} < r(r+1) with r = m - k*ell.
    FactAd,
    /// 1/f(lambda) - 1/f(ell) <= 128 k^5 / m^3, exact surd comparison.
    FactDiff,
    /// f(ell*) <= ell_cr/2 (the candidate-selection inequality).
    PropRcr,
}

/// Per-m witness values backing the verdict in a [`ScanRow`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum ScanWitness {
    FactAd {
        ell: u64,
        lower: Rational,
        upper: u64,
    },
    FactDiff {
        difference: Surd,
        bound: Rational,
        /// m >= 6k^2: below this the bound is reported, not asserted.
        in_proof_range: bool,
    },
    PropRcr {
        f_ell_star: Option<Rational>,
        half_ell_cr: Option<Rational>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRow {
    pub m: u64,
    /// None when the inequality does not apply (r_cr absent in `PropRcr`).
    pub holds: Option<bool>,
    pub witness: ScanWitness,
}

/// Evaluates one inequality for every m in the (inclusive) range.
pub fn scan_inequalities(
    mode: ScanMode,
    k: u32,
    m_range: std::ops::RangeInclusive<u64>,
) -> Result<Vec<ScanRow>> {
    let (from, to) = (*m_range.start(), *m_range.end());
    if from > to {
        return Err(Error::domain(format!("empty scan range {from}..={to}")));
    }
    check_km(k, from)?;
    (from..=to).map(|m| scan_one(mode, k, m)).collect()
}

fn scan_one(mode: ScanMode, k: u32, m: u64) -> Result<ScanRow> {
    match mode {
        ScanMode::FactAd => {
            let ell = ell_argmin(k, m)?;
            let lower = Rational::from_u64(m) / Rational::from_u64(k as u64 + 1);
            let r = m - (k as u64) * ell; // nonnegative by the argmin domain
            let upper = r
                .checked_mul(r + 1)
                .ok_or_else(|| Error::resource("r(r+1) exceeds u64"))?;
            let holds = lower.cmp(&Rational::from_u64(ell)) != std::cmp::Ordering::Greater
                && ell < upper;
            Ok(ScanRow {
                m,
                holds: Some(holds),
                witness: ScanWitness::FactAd { ell, lower, upper },
            })
        }
        ScanMode::FactDiff => {
            let (_, f_lambda) = lambda_profile(k, m)?;
            if f_lambda.sign() != std::cmp::Ordering::Greater {
                return Err(Error::domain(format!(
                    "f(lambda) <= 0 at (k,m) = ({k},{m}); reciprocal gap undefined"
                )));
            }
            let ell = ell_argmin(k, m)?;
            let f_ell = f_at_int(k, m, ell)?;
            let difference = f_lambda.recip()?.sub_rational(&f_ell.recip()?);
            let k5 = BigInt::from(k).pow(5) * BigInt::from(128);
            let m3 = BigInt::from(m).pow(3);
            let bound = Rational::from_big(k5, m3);
            let in_proof_range = m >= 6 * (k as u64) * (k as u64);
            let holds = difference.cmp_rational(&bound) != std::cmp::Ordering::Greater;
            Ok(ScanRow {
                m,
                holds: Some(holds),
                witness: ScanWitness::FactDiff {
                    difference,
                    bound,
                    in_proof_range,
                },
            })
        }
        ScanMode::PropRcr => {
            let params = critical_params(k, m)?;
            match (params.r_cr, params.ell_star) {
                (Some(_), Some(ell_star)) => {
                    let f_star = f_at_int(k, m, ell_star)?;
                    let half = Rational::from_u64(params.ell_cr.expect("ell_cr with r_cr"))
                        / Rational::from_u64(2);
                    let holds = f_star <= half;
                    Ok(ScanRow {
                        m,
                        holds: Some(holds),
                        witness: ScanWitness::PropRcr {
                            f_ell_star: Some(f_star),
                            half_ell_cr: Some(half),
                        },
                    })
                }
                _ => Ok(ScanRow {
                    m,
                    holds: None,
                    witness: ScanWitness::PropRcr {
                        f_ell_star: None,
                        half_ell_cr: None,
                    },
                }),
            }
        }
    }
}

/// m values where the candidate-selection inequality fails and no settled
/// exponent is on record: the cases the calculus leaves open.
pub fn remaining_unknown(k: u32, max_m: u64) -> Result<Vec<u64>> {
    let rows = scan_inequalities(ScanMode::PropRcr, k, (k as u64 + 1)..=max_m)?;
    Ok(rows
        .into_iter()
        .filter(|row| row.holds == Some(false) && known_lookup(k, row.m).is_none())
        .map(|row| row.m)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prop_rcr_failures_k2_to_100() {
        let rows = scan_inequalities(ScanMode::PropRcr, 2, 3..=100).unwrap();
        let failures: Vec<u64> = rows
            .iter()
            .filter(|r| r.holds == Some(false))
            .map(|r| r.m)
            .collect();
        assert_eq!(
            failures,
            vec![4, 5, 6, 7, 9, 11, 13, 14, 16, 18, 20, 22, 27, 29, 31, 33, 44, 46]
        );
        // m=3 is the lone inapplicable row for k=2 in this range.
        let inapplicable: Vec<u64> = rows
            .iter()
            .filter(|r| r.holds.is_none())
            .map(|r| r.m)
            .collect();
        assert_eq!(inapplicable, vec![3]);
    }

    #[test]
    fn remaining_unknown_k2() {
        assert_eq!(
            remaining_unknown(2, 100).unwrap(),
            vec![22, 27, 29, 31, 33, 44, 46]
        );
    }

    #[test]
    fn fact_ad_windows() {
        for row in scan_inequalities(ScanMode::FactAd, 2, 240..=250).unwrap() {
            assert_eq!(row.holds, Some(true), "m={}", row.m);
        }
        // Small m where it can fail: (1,2) has ell=2, r=0, upper=0.
        let row = &scan_inequalities(ScanMode::FactAd, 1, 2..=2).unwrap()[0];
        assert_eq!(row.holds, Some(false));
    }

    #[test]
    fn fact_diff_small_k1() {
        for row in scan_inequalities(ScanMode::FactDiff, 1, 6..=50).unwrap() {
            assert_eq!(row.holds, Some(true), "m={}", row.m);
            if let ScanWitness::FactDiff { in_proof_range, .. } = row.witness {
                assert_eq!(in_proof_range, row.m >= 6);
            } else {
                panic!("wrong witness variant");
            }
        }
    }

    #[test]
    fn fact_diff_guard_fires() {
        // f(lambda) = 0 at (7,8): sqrt(8*9*50) = 60 = ((2*8+1)*7+1)/2.
        let err = scan_inequalities(ScanMode::FactDiff, 7, 8..=8).unwrap_err();
        assert!(matches!(err, Error::Domain(_)));
    }

    #[test]
    fn range_validation() {
        assert!(scan_inequalities(ScanMode::FactAd, 2, 10..=5).is_err());
        assert!(scan_inequalities(ScanMode::FactAd, 2, 2..=10).is_err());
    }
}
