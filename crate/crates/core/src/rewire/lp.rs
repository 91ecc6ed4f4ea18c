//! Tiny exact linear programs: minimize the coordinate sum subject to
//! lower-bound rows.
//!
//! The programs built here have a handful of variables, so exhaustive
//! vertex enumeration over exact rationals replaces a general simplex:
//! the optimum of a feasible, bounded program sits at an intersection of
//! tight constraints, and the matching dual vertex doubles as a
//! certificate a reader can verify with rational arithmetic alone.

use crate::error::{Error, Result};
use crate::exact::Rational;

/// Minimize `sum(xi)` subject to `rows[r] . xi >= rhs[r]` and `xi >= 0`.
pub(crate) struct LinearProgram {
    pub rows: Vec<Vec<Rational>>,
    pub rhs: Vec<Rational>,
    pub nvars: usize,
}

/// Optimal value with a primal witness and a dual certificate.
pub(crate) struct LpSolution {
    pub value: Rational,
    #[allow(dead_code)] // witness for tests and future telemetry
    pub primal: Vec<Rational>,
    /// One multiplier per row: nonnegative, per-variable weighted row
    /// sums at most 1, and weighted right-hand sides summing to `value`.
    /// Lexicographically smallest among optimal dual vertices, so reruns
    /// are reproducible.
    pub multipliers: Vec<Rational>,
}

impl LinearProgram {
    pub fn solve(&self) -> Result<LpSolution> {
        let n = self.nvars;
        let r = self.rows.len();
        if n == 0 || self.rows.iter().any(|row| row.len() != n) || self.rhs.len() != r {
            return Err(Error::internal("malformed linear program"));
        }
        if n > 8 || r > 24 {
            return Err(Error::resource(
                "linear program larger than the vertex enumerator supports",
            ));
        }

        // primal vertices: n tight constraints among the rows and axes
        let mut best: Option<(Rational, Vec<Rational>)> = None;
        for combo in combinations(r + n, n) {
            let mut mat = Vec::with_capacity(n);
            let mut rhs = Vec::with_capacity(n);
            for &c in &combo {
                if c < r {
                    mat.push(self.rows[c].clone());
                    rhs.push(self.rhs[c].clone());
                } else {
                    let mut e = vec![Rational::zero(); n];
                    e[c - r] = Rational::one();
                    mat.push(e);
                    rhs.push(Rational::zero());
                }
            }
            let Some(point) = solve_square(mat, rhs) else {
                continue;
            };
            if !self.admits(&point) {
                continue;
            }
            let value = point
                .iter()
                .fold(Rational::zero(), |acc, v| acc + v.clone());
            if best.as_ref().is_none_or(|(bv, _)| value < *bv) {
                best = Some((value, point));
            }
        }
        let Some((value, primal)) = best else {
            return Err(Error::domain("no feasible corner; the program is infeasible"));
        };
        let multipliers = self.dual_certificate(&value)?;
        Ok(LpSolution {
            value,
            primal,
            multipliers,
        })
    }

    fn admits(&self, point: &[Rational]) -> bool {
        if point.iter().any(|v| *v < Rational::zero()) {
            return false;
        }
        self.rows
            .iter()
            .zip(&self.rhs)
            .all(|(row, b)| dot(row, point) >= *b)
    }

    /// Enumerates dual vertices (maximize `rhs . mu` subject to
    /// `rows^T mu <= 1` per variable and `mu >= 0`) and returns the
    /// lexicographically smallest optimum, insisting that it matches the
    /// primal value.
    fn dual_certificate(&self, target: &Rational) -> Result<Vec<Rational>> {
        let n = self.nvars;
        let r = self.rows.len();
        let mut best: Option<(Rational, Vec<Rational>)> = None;
        for combo in combinations(n + r, r) {
            let mut mat = Vec::with_capacity(r);
            let mut rhs = Vec::with_capacity(r);
            for &c in &combo {
                if c < n {
                    // column c of the row matrix, tight at 1
                    mat.push(self.rows.iter().map(|row| row[c].clone()).collect());
                    rhs.push(Rational::one());
                } else {
                    let mut e = vec![Rational::zero(); r];
                    e[c - n] = Rational::one();
                    mat.push(e);
                    rhs.push(Rational::zero());
                }
            }
            let Some(mu) = solve_square(mat, rhs) else {
                continue;
            };
            if mu.iter().any(|v| *v < Rational::zero()) {
                continue;
            }
            let within_caps = (0..n).all(|var| {
                let col = self
                    .rows
                    .iter()
                    .zip(&mu)
                    .fold(Rational::zero(), |acc, (row, w)| {
                        acc + row[var].clone() * w.clone()
                    });
                col <= Rational::one()
            });
            if !within_caps {
                continue;
            }
            let value = dot(&self.rhs, &mu);
            let better = match &best {
                None => true,
                Some((bv, bmu)) => value > *bv || (value == *bv && mu < *bmu),
            };
            if better {
                best = Some((value, mu));
            }
        }
        match best {
            Some((value, mu)) if value == *target => Ok(mu),
            Some(_) => Err(Error::internal("primal and dual optima disagree")),
            None => Err(Error::internal("dual program has no feasible corner")),
        }
    }
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .fold(Rational::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

/// Solves an `n x n` rational system by Gauss-Jordan elimination;
/// `None` when singular.
fn solve_square(mut mat: Vec<Vec<Rational>>, mut rhs: Vec<Rational>) -> Option<Vec<Rational>> {
    let n = mat.len();
    for col in 0..n {
        let pivot = (col..n).find(|&row| !mat[row][col].is_zero())?;
        mat.swap(col, pivot);
        rhs.swap(col, pivot);
        let inv = mat[col][col].clone().recip().ok()?;
        for c in col..n {
            mat[col][c] = mat[col][c].clone() * inv.clone();
        }
        rhs[col] = rhs[col].clone() * inv.clone();
        for row in 0..n {
            if row == col || mat[row][col].is_zero() {
                continue;
            }
            let factor = mat[row][col].clone();
            for c in col..n {
                let delta = mat[col][c].clone() * factor.clone();
                mat[row][c] = mat[row][c].clone() - delta;
            }
            let delta = rhs[col].clone() * factor;
            rhs[row] = rhs[row].clone() - delta;
        }
    }
    Some(rhs)
}

/// All `k`-subsets of `0..n`, lexicographic.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let mut i = k;
        while i > 0 && idx[i - 1] == i - 1 + n - k {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}
