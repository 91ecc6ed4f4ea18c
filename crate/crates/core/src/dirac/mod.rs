//! Threshold calculus for powers of Hamilton cycles in randomly augmented
//! graphs with (k/(k+1) + eps)n minimum degree.
//!
//! For a pair (k, m) the calculus evaluates the edge-cost function f, its
//! real minimizer lambda and integer minimizer ell, the critical
//! decomposition parameters (r_cr, ell_cr, ell*), and classifies the pair as
//! an ordinary or over-threshold candidate with an exact candidate exponent.

mod critical;
mod known;
mod pell;
mod scan;
mod table;
mod threshold;

pub use critical::{critical_params, r_cr_absent_by_characterization, CriticalParams};
pub use known::{known_lookup, KnownResult, Nature, SourceTag};
pub use pell::{pell_integer_lambdas, PellSolution};
pub use scan::{remaining_unknown, scan_inequalities, ScanMode, ScanRow, ScanWitness};
pub use table::{emit_table, TableFormat};
pub use threshold::{ell_argmin, f_at_int, f_eval, lambda_profile};

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::exact::{Rational, Surd};

use threshold::{check_km, lambda_floor};

/// Which side of the threshold dichotomy a pair falls on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassKind {
    /// f(ell*) > ell_cr/2: the blow-up bound 2/ell_cr is the candidate.
    OrdinaryCandidate,
    /// f(ell*) < ell_cr/2: the braid bound 1/f(ell*) is the candidate.
    OverCandidate,
    /// r_cr absent: only the braid bound 1/f(ell) is available.
    OverNoRcr,
    /// f(ell*) = ell_cr/2: the calculus cannot separate the two natures.
    BoundaryTie,
}

impl ClassKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ClassKind::OrdinaryCandidate => "ordinary_candidate",
            ClassKind::OverCandidate => "over_candidate",
            ClassKind::OverNoRcr => "over_no_rcr",
            ClassKind::BoundaryTie => "boundary_tie",
        }
    }
}

/// Candidate exponent for (k,m), plus the settled value when one exists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub kind: ClassKind,
    /// The candidate eta itself (the threshold is n^(-eta)), e.g. 2/5 at
    /// (2,11). Known-results tables list reciprocals 1/eta instead.
    pub exponent: Rational,
    pub proven: Option<KnownResult>,
}

/// Full parameter profile of a pair (k,m).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiracProfile {
    pub k: u32,
    pub m: u64,
    /// f at floor(lambda).
    pub f_floor: Rational,
    /// f at ceil(lambda).
    pub f_ceil: Rational,
    pub lambda: Surd,
    pub f_lambda: Surd,
    /// Integer minimizer ell_{k,m}.
    pub ell: u64,
    pub r_cr: Option<u64>,
    pub ell_cr: Option<u64>,
    pub ell_star: Option<u64>,
    pub f_ell_star: Option<Rational>,
    pub verdict: Classification,
}

/// Classifies (k,m) per the candidate-selection inequality f(ell*) vs
/// ell_cr/2, falling back to the braid bound when r_cr does not exist.
pub fn classify(k: u32, m: u64) -> Result<Classification> {
    check_km(k, m)?;
    let crit = critical_params(k, m)?;
    let proven = known_lookup(k, m);
    let (kind, exponent) = match (crit.r_cr, crit.ell_cr, crit.ell_star) {
        (Some(_), Some(ell_cr), Some(ell_star)) => {
            let f_star = f_at_int(k, m, ell_star)?;
            let half = Rational::from_u64(ell_cr) / Rational::from_u64(2);
            let blow_up = Rational::from_u64(2) / Rational::from_u64(ell_cr);
            match f_star.cmp(&half) {
                std::cmp::Ordering::Less => (ClassKind::OverCandidate, f_star.recip()?),
                std::cmp::Ordering::Greater => (ClassKind::OrdinaryCandidate, blow_up),
                std::cmp::Ordering::Equal => (ClassKind::BoundaryTie, blow_up),
            }
        }
        _ => {
            let ell = ell_argmin(k, m)?;
            let f_ell = f_at_int(k, m, ell)?;
            (ClassKind::OverNoRcr, f_ell.recip()?)
        }
    };
    Ok(Classification {
        kind,
        exponent,
        proven,
    })
}

/// Computes the full profile of (k,m).
pub fn profile(k: u32, m: u64) -> Result<DiracProfile> {
    check_km(k, m)?;
    let (lambda, f_lambda) = lambda_profile(k, m)?;
    let (fl, exact) = lambda_floor(k, m);
    let cl = if exact { fl } else { fl + 1 };
    let f_floor = f_at_int(k, m, fl)?;
    let f_ceil = f_at_int(k, m, cl)?;
    let ell = ell_argmin(k, m)?;
    let crit = critical_params(k, m)?;
    let f_ell_star = match crit.ell_star {
        Some(s) => Some(f_at_int(k, m, s)?),
        None => None,
    };
    let verdict = classify(k, m)?;
    Ok(DiracProfile {
        k,
        m,
        f_floor,
        f_ceil,
        lambda,
        f_lambda,
        ell,
        r_cr: crit.r_cr,
        ell_cr: crit.ell_cr,
        ell_star: crit.ell_star,
        f_ell_star,
        verdict,
    })
}

/// Wire-format row for one (k,m): the JSON shape of `params` and of table
/// rows in JSON format. Field order is the serialized key order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamsReport {
    pub k: u32,
    pub m: u64,
    pub r_cr: Option<u64>,
    pub ell_cr: Option<u64>,
    pub ell: u64,
    pub ell_star: Option<u64>,
    pub f_ell: Rational,
    pub f_ell_star: Option<Rational>,
    pub lambda: Surd,
    pub verdict: ClassKind,
    pub exponent: Rational,
    pub known: Option<KnownResult>,
}

/// Builds the wire-format row for (k,m).
pub fn params_report(k: u32, m: u64) -> Result<ParamsReport> {
    let p = profile(k, m)?;
    let f_ell = f_at_int(k, m, p.ell)?;
    Ok(ParamsReport {
        k,
        m,
        r_cr: p.r_cr,
        ell_cr: p.ell_cr,
        ell: p.ell,
        ell_star: p.ell_star,
        f_ell,
        f_ell_star: p.f_ell_star,
        lambda: p.lambda,
        verdict: p.verdict.kind,
        exponent: p.verdict.exponent,
        known: p.verdict.proven,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn classify_reference_points() {
        let c = classify(2, 11).unwrap();
        assert_eq!(c.kind, ClassKind::OrdinaryCandidate);
        assert_eq!(c.exponent, rat("2/5"));

        let c = classify(2, 12).unwrap();
        assert_eq!(c.kind, ClassKind::OverCandidate);
        assert_eq!(c.exponent, rat("5/13"));

        let c = classify(1, 5).unwrap();
        assert_eq!(c.kind, ClassKind::BoundaryTie);
        assert_eq!(c.exponent, rat("1/2"));

        let c = classify(3, 11).unwrap();
        assert_eq!(c.kind, ClassKind::OverNoRcr);
        assert_eq!(c.exponent, rat("1/2"));
    }

    #[test]
    fn profile_reference_point() {
        // (1,8): lambda = 6, everything collapses to rationals.
        let p = profile(1, 8).unwrap();
        assert_eq!(p.lambda, Surd::from_rational(rat("6")));
        assert_eq!(p.f_lambda, Surd::from_rational(rat("3")));
        assert_eq!(p.f_floor, rat("3"));
        assert_eq!(p.f_ceil, rat("3"));
        assert_eq!(p.ell, 6);
        assert_eq!((p.r_cr, p.ell_cr, p.ell_star), (Some(2), Some(6), Some(5)));
        assert_eq!(p.f_ell_star, Some(rat("16/5")));
        assert_eq!(p.verdict.kind, ClassKind::OrdinaryCandidate);
    }

    #[test]
    fn report_json_shape() {
        let rep = params_report(2, 11).unwrap();
        let json = serde_json::to_value(&rep).unwrap();
        assert_eq!(
            json,
            serde_json::json!({
                "k": 2,
                "m": 11,
                "r_cr": 1,
                "ell_cr": 5,
                "ell": 5,
                "ell_star": 4,
                "f_ell": "11/5",
                "f_ell_star": "3",
                "lambda": "0+2/5*sqrt(165)",
                "verdict": "ordinary_candidate",
                "exponent": "2/5",
                "known": {
                    "k": 2,
                    "m": 11,
                    "reciprocal_exponent": "5/2",
                    "nature": "ordinary",
                    "source": "starred",
                },
            })
        );
    }

    #[test]
    fn report_absent_row() {
        let rep = params_report(3, 17).unwrap();
        assert_eq!(rep.r_cr, None);
        assert_eq!(rep.ell_star, None);
        assert_eq!(rep.f_ell_star, None);
        assert_eq!(rep.verdict, ClassKind::OverNoRcr);
        assert_eq!(rep.exponent, rat("5/13"));
        let json = serde_json::to_value(&rep).unwrap();
        assert!(json.get("r_cr").unwrap().is_null());
    }
}
