//! Riccati coefficient matching for `W(r) = -B/r + D + sum_i A_i r^i`.
//!
//! Expanding `W^2 - W'` and matching powers of `r` against `V - E0` gives
//!
//! ```text
//! r^-2 :  B^2 - B = l(l+1)                      -> B = l + 1
//! r^-1 :  -2BD = c                              -> D = -c / (2(l+1))
//! r^k  :  a_k = sum_{i+j=k} A_i A_j             (k = n+1..2n, solved top-down)
//! r^m  :  a_m = 2D A_m - (2B+m+1) A_{m+1}
//!               + sum_{i+j=m} A_i A_j           (m = 1..n, the constraints)
//! r^0  :  E0  = -D^2 + (2B+1) A_1 + shift
//! ```
//!
//! Sums run over ordered pairs `1 <= i, j <= n`, so the diagonal term is the
//! square `A_{k/2}^2` for even `k`. `A_j = 0` for `j > n`.

use crate::error::{Error, Result};
use crate::potential::PolynomialCoulombPotential;

pub const DEFAULT_CONSTRAINT_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct Superpotential {
    /// Centrifugal strength, always `l + 1`.
    pub b: f64,
    /// Constant term.
    pub d: f64,
    /// `a[i]` is the coefficient of `r^(i+1)`, length `n`.
    pub a: Vec<f64>,
    /// Absolute ground-state energy, including the potential's shift.
    pub ground_energy: f64,
}

/// `sum_{i+j=k, 1<=i,j<=n} A_i A_j` with `A` stored zero-based.
fn convolution(a: &[f64], k: usize) -> f64 {
    let n = a.len();
    (1..=n)
        .filter_map(|i| {
            let j = k.checked_sub(i)?;
            (1..=n).contains(&j).then(|| a[i - 1] * a[j - 1])
        })
        .sum()
}

impl Superpotential {
    /// Triangular solve using only `l`, `c` and `a_{n+1}..a_{2n}`.
    pub fn solve(pot: &PolynomialCoulombPotential) -> Self {
        let n = pot.n();
        let b = pot.l() as f64 + 1.0;
        let d = -pot.c() / (2.0 * b);

        let mut a = vec![0.0; n];
        a[n - 1] = pot.coeff(2 * n).sqrt();
        let lead = 2.0 * a[n - 1];
        for k in (n + 1..2 * n).rev() {
            let unknown = k - n;
            // pairs strictly between the unknown and A_n are already solved
            let known: f64 = (unknown + 1..n)
                .filter(|&i| k - i > unknown && k - i < n)
                .map(|i| a[i - 1] * a[k - i - 1])
                .sum();
            a[unknown - 1] = (pot.coeff(k) - known) / lead;
        }

        let ground_energy = -d * d + (2.0 * b + 1.0) * a[0] + pot.shift();
        Self {
            b,
            d,
            a,
            ground_energy,
        }
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }

    /// One-based `A_i`, zero outside `1..=n`.
    pub fn coeff(&self, i: usize) -> f64 {
        if i == 0 {
            return 0.0;
        }
        self.a.get(i - 1).copied().unwrap_or(0.0)
    }

    /// Linear coefficient `A_1`; sets the ladder spacing contribution `2 A_1`.
    pub fn linear(&self) -> f64 {
        self.a[0]
    }

    /// `S(r) = D + sum_i A_i r^i`, the part of `W` regular at the origin.
    pub fn regular_part(&self, r: f64) -> f64 {
        self.d + self.a.iter().rev().fold(0.0, |acc, &x| (acc + x) * r)
    }

    pub fn regular_derivative(&self, r: f64) -> f64 {
        self.a
            .iter()
            .enumerate()
            .rev()
            .fold(0.0, |acc, (i, &x)| acc * r + (i + 1) as f64 * x)
    }

    pub fn eval(&self, r: f64) -> f64 {
        -self.b / r + self.regular_part(r)
    }

    pub fn derivative(&self, r: f64) -> f64 {
        self.b / (r * r) + self.regular_derivative(r)
    }

    /// Dependent coefficient `a_m` that makes the Riccati equation exact.
    pub fn required_coeff(&self, m: usize) -> f64 {
        2.0 * self.d * self.coeff(m) - (2.0 * self.b + m as f64 + 1.0) * self.coeff(m + 1)
            + convolution(&self.a, m)
    }
}

pub fn solve_superpotential(pot: &PolynomialCoulombPotential) -> Superpotential {
    Superpotential::solve(pot)
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConstraintReport {
    pub required: Vec<f64>,
    pub supplied: Vec<f64>,
    pub residuals: Vec<f64>,
    pub tolerance: f64,
    pub satisfied: bool,
}

impl ConstraintReport {
    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().fold(0.0, |m, r| m.max(r.abs()))
    }
}

pub fn constraint_report(
    pot: &PolynomialCoulombPotential,
    sp: &Superpotential,
    tol: f64,
) -> ConstraintReport {
    let required: Vec<f64> = (1..=pot.n()).map(|m| sp.required_coeff(m)).collect();
    let supplied = pot.dependent().to_vec();
    let residuals: Vec<f64> = supplied.iter().zip(&required).map(|(s, r)| s - r).collect();
    let satisfied = residuals.iter().all(|r| r.abs() <= tol);
    ConstraintReport {
        required,
        supplied,
        residuals,
        tolerance: tol,
        satisfied,
    }
}

/// The potential with its dependent coefficients replaced by the required ones.
pub fn constrained(pot: &PolynomialCoulombPotential) -> PolynomialCoulombPotential {
    let sp = Superpotential::solve(pot);
    let report = constraint_report(pot, &sp, DEFAULT_CONSTRAINT_TOL);
    pot.with_dependent(&report.required)
}

/// `max_r |W^2 - W' - (V - E0)|` over the grid.
pub fn riccati_residual(
    pot: &PolynomialCoulombPotential,
    sp: &Superpotential,
    grid: &[f64],
) -> Result<f64> {
    // With W = -B/r + S(r): W^2 - W' = (B^2 - B)/r^2 - 2B S/r + S^2 - S'.
    // The singular terms are grouped with their counterparts in V so that
    // the large 1/r^2 pieces cancel before rounding.
    let centrifugal = sp.b * sp.b - sp.b - pot.centrifugal();
    let mut worst: f64 = 0.0;
    for &r in grid {
        if !(r > 0.0) {
            return Err(Error::NonPositiveRadius(r));
        }
        let smooth = sp.regular_part(r);
        let smooth_prime = sp.regular_derivative(r);
        let diff = centrifugal / (r * r) + (-2.0 * sp.b * smooth - pot.c()) / r + smooth * smooth
            - smooth_prime
            - pot.polynomial_part(r)
            + sp.ground_energy;
        worst = worst.max(diff.abs());
    }
    Ok(worst)
}

/// `count` evenly spaced points on `[lo, hi]`.
pub fn linear_grid(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    match count {
        0 => Vec::new(),
        1 => vec![lo],
        _ => {
            let h = (hi - lo) / (count - 1) as f64;
            (0..count).map(|i| lo + h * i as f64).collect()
        }
    }
}
