//! Exact rational linear programming: phase-1 simplex with Bland's rule,
//! returning either a feasible point or a Farkas infeasibility certificate.
//!
//! Only feasibility is ever asked here, so a single phase suffices.  Free
//! variables are split as `c = u - v`; every row receives an artificial
//! variable and the artificial sum is minimized.  Bland's least-index rule
//! on both the entering and leaving choices guarantees termination and makes
//! the whole computation deterministic, which in turn makes every emitted
//! certificate byte-stable.

use crate::error::{Error, Result};
use crate::rational::Rational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// Direction of an inequality row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Sense {
    Le,
    Ge,
}

impl Sense {
    /// Sign that converts the row to `<=` orientation.
    fn flip_sign(self) -> Rational {
        match self {
            Sense::Le => Rational::one(),
            Sense::Ge => -Rational::one(),
        }
    }
}

/// One inequality row `<coeffs, c> sense rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IneqRow {
    pub coeffs: Vec<Rational>,
    pub sense: Sense,
    pub rhs: Rational,
    /// Human-readable provenance of the row.
    pub label: String,
}

/// One equality row `<coeffs, c> = rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EqRow {
    pub coeffs: Vec<Rational>,
    pub rhs: Rational,
    pub label: String,
}

/// A feasibility problem over free rational variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearProgram {
    pub num_vars: usize,
    pub ineqs: Vec<IneqRow>,
    pub eqs: Vec<EqRow>,
}

impl LinearProgram {
    fn validate(&self) -> Result<()> {
        for row in &self.ineqs {
            if row.coeffs.len() != self.num_vars {
                return Err(Error::DimensionMismatch(format!(
                    "row `{}` has {} coefficients, expected {}",
                    row.label,
                    row.coeffs.len(),
                    self.num_vars
                )));
            }
        }
        for row in &self.eqs {
            if row.coeffs.len() != self.num_vars {
                return Err(Error::DimensionMismatch(format!(
                    "row `{}` has {} coefficients, expected {}",
                    row.label,
                    row.coeffs.len(),
                    self.num_vars
                )));
            }
        }
        Ok(())
    }

    /// Exact check that `point` satisfies every row.
    pub fn satisfied_by(&self, point: &[Rational]) -> bool {
        if point.len() != self.num_vars {
            return false;
        }
        let dot = |coeffs: &[Rational]| -> Rational {
            coeffs.iter().zip(point).map(|(a, b)| a * b).sum()
        };
        self.ineqs.iter().all(|row| match row.sense {
            Sense::Le => dot(&row.coeffs) <= row.rhs,
            Sense::Ge => dot(&row.coeffs) >= row.rhs,
        }) && self.eqs.iter().all(|row| dot(&row.coeffs) == row.rhs)
    }
}

/// Exact multipliers proving infeasibility: a nonnegative combination of the
/// inequality rows (each oriented as `<=`) plus an arbitrary combination of
/// the equality rows whose coefficients cancel to zero while the combined
/// right-hand side is `-1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FarkasCertificate {
    #[serde(with = "crate::report::serde_rational_vec")]
    pub ineq_multipliers: Vec<Rational>,
    #[serde(with = "crate::report::serde_rational_vec")]
    pub eq_multipliers: Vec<Rational>,
}

/// Result of a feasibility solve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Feasible(Vec<Rational>),
    Infeasible(FarkasCertificate),
}

/// Independent certificate checker: re-derives the `0 <= -1` contradiction
/// from the multipliers and the rows alone, with no reference to how the
/// certificate was found.
pub fn verify_farkas(lp: &LinearProgram, cert: &FarkasCertificate) -> bool {
    if cert.ineq_multipliers.len() != lp.ineqs.len()
        || cert.eq_multipliers.len() != lp.eqs.len()
    {
        return false;
    }
    if cert.ineq_multipliers.iter().any(|y| y.is_negative()) {
        return false;
    }
    let mut combined = vec![Rational::zero(); lp.num_vars];
    let mut combined_rhs = Rational::zero();
    for (row, y) in lp.ineqs.iter().zip(&cert.ineq_multipliers) {
        let s = row.sense.flip_sign();
        let weight = y * &s;
        for (acc, c) in combined.iter_mut().zip(&row.coeffs) {
            *acc += &weight * c;
        }
        combined_rhs += &weight * &row.rhs;
    }
    for (row, z) in lp.eqs.iter().zip(&cert.eq_multipliers) {
        for (acc, c) in combined.iter_mut().zip(&row.coeffs) {
            *acc += z * c;
        }
        combined_rhs += z * &row.rhs;
    }
    combined.iter().all(Rational::is_zero) && combined_rhs.is_negative()
}

/// Decide feasibility exactly.  A `Feasible` outcome carries a point that
/// satisfies every row; an `Infeasible` outcome carries a Farkas certificate
/// scaled so the combined right-hand side is exactly `-1`, and the
/// certificate has already been re-verified by [`verify_farkas`].
pub fn solve(lp: &LinearProgram) -> Result<LpOutcome> {
    lp.validate()?;
    let n = lp.num_vars;
    let m_ineq = lp.ineqs.len();
    let m = m_ineq + lp.eqs.len();
    if m == 0 {
        return Ok(LpOutcome::Feasible(vec![Rational::zero(); n]));
    }

    // Column layout: u (n) | v (n) | slacks (m_ineq) | artificials (m) | rhs.
    let col_v = n;
    let col_slack = 2 * n;
    let col_art = 2 * n + m_ineq;
    let width = 2 * n + m_ineq + m + 1;
    let col_rhs = width - 1;

    let mut tableau: Vec<Vec<Rational>> = Vec::with_capacity(m);
    // Row sign applied to reach a nonnegative right-hand side, recorded to
    // map dual values back to the original orientation.
    let mut row_flip: Vec<Rational> = Vec::with_capacity(m);

    let mut push_row = |coeffs: &[Rational], slack: Option<usize>, rhs: &Rational,
                        tableau: &mut Vec<Vec<Rational>>,
                        row_flip: &mut Vec<Rational>| {
        let flip = if rhs.is_negative() {
            -Rational::one()
        } else {
            Rational::one()
        };
        let mut row = vec![Rational::zero(); width];
        for (j, c) in coeffs.iter().enumerate() {
            row[j] = &flip * c;
            row[col_v + j] = -&row[j];
        }
        if let Some(i) = slack {
            row[col_slack + i] = flip.clone();
        }
        let r = tableau.len();
        row[col_art + r] = Rational::one();
        row[col_rhs] = &flip * rhs;
        tableau.push(row);
        row_flip.push(flip);
    };

    for (i, row) in lp.ineqs.iter().enumerate() {
        // Orient as `<=` first; the slack then enters with +1 before any flip.
        let s = row.sense.flip_sign();
        let coeffs: Vec<Rational> = row.coeffs.iter().map(|c| &s * c).collect();
        let rhs = &s * &row.rhs;
        push_row(&coeffs, Some(i), &rhs, &mut tableau, &mut row_flip);
    }
    for row in &lp.eqs {
        push_row(&row.coeffs, None, &row.rhs, &mut tableau, &mut row_flip);
    }

    // Phase-1 objective: minimize the artificial sum.  Reduced-cost row with
    // the artificials basic: cost(col) - sum of the column, which leaves the
    // artificial columns at zero; the rhs cell holds minus the objective.
    let mut obj = vec![Rational::zero(); width];
    for (j, o) in obj.iter_mut().enumerate() {
        let cost = if (col_art..col_rhs).contains(&j) {
            Rational::one()
        } else {
            Rational::zero()
        };
        let col_sum: Rational = tableau.iter().map(|row| row[j].clone()).sum();
        *o = cost - col_sum;
    }
    let mut basis: Vec<usize> = (0..m).map(|r| col_art + r).collect();

    let mut iterations = 0usize;
    loop {
        iterations += 1;
        if iterations > 200_000 {
            return Err(Error::InvalidInput(
                "simplex iteration guard exceeded".into(),
            ));
        }
        // Bland: entering column is the least index with negative reduced cost.
        let Some(entering) = (0..col_rhs).find(|&j| obj[j].is_negative()) else {
            break;
        };
        // Leaving row: minimum ratio among positive pivot entries; ties by
        // least basic variable index.
        let mut leaving: Option<(usize, Rational)> = None;
        for (r, row) in tableau.iter().enumerate() {
            if !row[entering].is_positive() {
                continue;
            }
            let ratio = &row[col_rhs] / &row[entering];
            leaving = match leaving {
                None => Some((r, ratio)),
                Some((br, best)) => {
                    if ratio < best || (ratio == best && basis[r] < basis[br]) {
                        Some((r, ratio))
                    } else {
                        Some((br, best))
                    }
                }
            };
        }
        let Some((pivot_row, _)) = leaving else {
            // The phase-1 objective is bounded below by zero, so an
            // unbounded direction cannot occur.
            return Err(Error::InvalidInput(
                "phase-1 simplex reported an unbounded direction".into(),
            ));
        };
        // Pivot.
        let pivot = tableau[pivot_row][entering].clone();
        for cell in tableau[pivot_row].iter_mut() {
            *cell /= &pivot;
        }
        for r in 0..m {
            if r == pivot_row || tableau[r][entering].is_zero() {
                continue;
            }
            let factor = tableau[r][entering].clone();
            for j in 0..width {
                let delta = &factor * &tableau[pivot_row][j];
                tableau[r][j] -= delta;
            }
        }
        if !obj[entering].is_zero() {
            let factor = obj[entering].clone();
            for j in 0..width {
                let delta = &factor * &tableau[pivot_row][j];
                obj[j] -= delta;
            }
        }
        basis[pivot_row] = entering;
    }

    let objective: Rational = -obj[col_rhs].clone();
    debug_assert!(!objective.is_negative());

    if objective.is_zero() {
        // Feasible: read the split variables out of the basis.
        let mut values = vec![Rational::zero(); col_art];
        for (r, &b) in basis.iter().enumerate() {
            if b < col_art {
                values[b] = tableau[r][col_rhs].clone();
            }
        }
        let point: Vec<Rational> = (0..n)
            .map(|j| &values[j] - &values[col_v + j])
            .collect();
        debug_assert!(lp.satisfied_by(&point));
        return Ok(LpOutcome::Feasible(point));
    }

    // Infeasible: recover the dual prices from the artificial reduced costs
    // (cost 1 minus price), undo the row flips, and orient so inequality
    // multipliers are nonnegative.
    let mut ineq_multipliers = Vec::with_capacity(m_ineq);
    let mut eq_multipliers = Vec::with_capacity(lp.eqs.len());
    for r in 0..m {
        let price = Rational::one() - &obj[col_art + r];
        let multiplier = -(&price * &row_flip[r]);
        if r < m_ineq {
            ineq_multipliers.push(multiplier);
        } else {
            eq_multipliers.push(multiplier);
        }
    }
    // The combined right-hand side equals minus the positive objective;
    // scale it to exactly -1 for a canonical certificate.
    let mut combined_rhs = Rational::zero();
    for (row, y) in lp.ineqs.iter().zip(&ineq_multipliers) {
        combined_rhs += &(y * &row.sense.flip_sign()) * &row.rhs;
    }
    for (row, z) in lp.eqs.iter().zip(&eq_multipliers) {
        combined_rhs += z * &row.rhs;
    }
    if !combined_rhs.is_negative() {
        return Err(Error::InvalidInput(
            "internal: infeasibility prices failed to produce a negative combined rhs".into(),
        ));
    }
    let scale = -combined_rhs.recip();
    let cert = FarkasCertificate {
        ineq_multipliers: ineq_multipliers.iter().map(|y| y * &scale).collect(),
        eq_multipliers: eq_multipliers.iter().map(|z| z * &scale).collect(),
    };
    if !verify_farkas(lp, &cert) {
        return Err(Error::InvalidInput(
            "internal: extracted Farkas certificate failed re-verification".into(),
        ));
    }
    Ok(LpOutcome::Infeasible(cert))
}
