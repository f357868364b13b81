//! SUSY partner `V2 = W^2 + W' + E0` and the conditional shape-invariance check.
//!
//! Since `V2 = V + 2W'`, the partner has `l -> l + 1`, a_m -> a_m + 2(m+1) A_{m+1}
//! for the low-order coefficients, and an extra constant `2 A_1`.

use crate::error::{Error, Result};
use crate::potential::PolynomialCoulombPotential;
use crate::superpotential::{constraint_report, Superpotential, DEFAULT_CONSTRAINT_TOL};

fn ensure_constrained(pot: &PolynomialCoulombPotential, sp: &Superpotential) -> Result<()> {
    let report = constraint_report(pot, sp, DEFAULT_CONSTRAINT_TOL);
    if report.satisfied {
        Ok(())
    } else {
        Err(Error::ConstraintsNotSatisfied(Box::new(report)))
    }
}

/// `a_m + 2(m+1) A_{m+1}` for `m = 1..n`.
fn translated_dependent(pot: &PolynomialCoulombPotential, sp: &Superpotential) -> Vec<f64> {
    (1..=pot.n())
        .map(|m| pot.coeff(m) + 2.0 * (m as f64 + 1.0) * sp.coeff(m + 1))
        .collect()
}

pub fn partner_potential(
    pot: &PolynomialCoulombPotential,
    sp: &Superpotential,
) -> Result<PolynomialCoulombPotential> {
    ensure_constrained(pot, sp)?;
    let translated = translated_dependent(pot, sp);
    Ok(pot
        .with_l(pot.l() + 1)
        .with_dependent(&translated)
        .with_shift(pot.shift() + 2.0 * sp.linear()))
}

#[derive(Debug, Clone, PartialEq)]
pub struct ShapeInvarianceWitness {
    pub translated_l: u32,
    /// Translated dependent coefficients `(a_m)^1`, `m = 1..n`.
    pub translated_coeffs: Vec<f64>,
    /// `(W^2 + W') - V(r; translated)` with no constant term in `V`.
    pub remainder: f64,
    /// `(W^2 + W' + E0) - V(r; translated)` keeping the original shift; equals `2 A_1`.
    pub absolute_offset: f64,
    /// Largest departure of the pointwise difference from `remainder`.
    pub max_deviation: f64,
}

pub fn shape_invariance_check(
    pot: &PolynomialCoulombPotential,
    grid: &[f64],
    tol: f64,
) -> Result<ShapeInvarianceWitness> {
    let sp = Superpotential::solve(pot);
    let translated_coeffs = translated_dependent(pot, &sp);
    let shape = pot
        .with_l(pot.l() + 1)
        .with_dependent(&translated_coeffs)
        .with_shift(0.0);

    let mut diffs = Vec::with_capacity(grid.len());
    for &r in grid {
        if !(r > 0.0) {
            return Err(Error::NonPositiveRadius(r));
        }
        let w = sp.eval(r);
        diffs.push(w * w + sp.derivative(r) - shape.eval(r));
    }
    let remainder = diffs.iter().sum::<f64>() / diffs.len().max(1) as f64;
    let max_deviation = diffs
        .iter()
        .fold(0.0f64, |m, x| m.max((x - remainder).abs()));
    if max_deviation > tol {
        return Err(Error::ShapeInvarianceViolation {
            max_deviation,
            tolerance: tol,
        });
    }
    Ok(ShapeInvarianceWitness {
        translated_l: pot.l() + 1,
        translated_coeffs,
        remainder,
        absolute_offset: remainder + sp.ground_energy - pot.shift(),
        max_deviation,
    })
}
