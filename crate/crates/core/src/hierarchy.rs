//! Hamiltonian hierarchy under conditional shape invariance.
//!
//! Step `k` keeps `c` and `a_{n+1}..a_{2n}`, sets `l -> l + k`, resets the
//! dependent coefficients to the values the constraints require at that `l`,
//! and carries the accumulated partner offset `2k A_1`. Its closed-form ground
//! energy approximates the `k`-th excited level of the original potential.
//! The `2k A_1` bookkeeping is a generalization of the quartic and sextic
//! ladders to any `n`; the closed forms in [`closed_form_energy`] check it.

use crate::error::{Error, Result};
use crate::partner::partner_potential;
use crate::potential::PolynomialCoulombPotential;
use crate::superpotential::{constraint_report, Superpotential, DEFAULT_CONSTRAINT_TOL};

pub const DEFAULT_MAX_DEPTH: usize = 16;

#[derive(Debug, Clone, PartialEq)]
pub struct HierarchyStep {
    pub k: usize,
    pub l: u32,
    /// Member potential, with required dependent coefficients and shift `2k A_1`.
    pub potential: PolynomialCoulombPotential,
    pub dependent_params: Vec<f64>,
    pub energy_abs: f64,
    /// `A_1` of this member's superpotential.
    pub linear_coeff: f64,
    /// Partner-translated coefficients of the previous member (empty at `k = 0`).
    pub translated: Vec<f64>,
    /// `|translated - dependent_params|` per coefficient (empty at `k = 0`).
    pub drift: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct HierarchyLadder {
    pub base: PolynomialCoulombPotential,
    pub steps: Vec<HierarchyStep>,
}

impl HierarchyLadder {
    pub fn energies(&self) -> Vec<f64> {
        self.steps.iter().map(|s| s.energy_abs).collect()
    }
}

pub fn build_ladder(pot: &PolynomialCoulombPotential, depth: usize) -> Result<HierarchyLadder> {
    build_ladder_with_cap(pot, depth, DEFAULT_MAX_DEPTH)
}

pub fn build_ladder_with_cap(
    pot: &PolynomialCoulombPotential,
    depth: usize,
    cap: usize,
) -> Result<HierarchyLadder> {
    if depth > cap {
        return Err(Error::DepthExceeded { depth, cap });
    }
    let sp0 = Superpotential::solve(pot);
    let base_report = constraint_report(pot, &sp0, DEFAULT_CONSTRAINT_TOL);
    if !base_report.satisfied {
        return Err(Error::ConstraintsNotSatisfied(Box::new(base_report)));
    }
    let spacing = 2.0 * sp0.linear();

    let mut steps: Vec<HierarchyStep> = Vec::with_capacity(depth + 1);
    for k in 0..=depth {
        let l = pot.l() + k as u32;
        let probe = pot.with_l(l);
        let sp = Superpotential::solve(&probe);
        let required = constraint_report(&probe, &sp, DEFAULT_CONSTRAINT_TOL).required;
        let member = probe
            .with_dependent(&required)
            .with_shift(pot.shift() + k as f64 * spacing);
        let member_sp = Superpotential::solve(&member);

        let (translated, drift) = match steps.last() {
            Some(prev) => {
                let prev_sp = Superpotential::solve(&prev.potential);
                let partner = partner_potential(&prev.potential, &prev_sp)?;
                let translated = partner.dependent().to_vec();
                let drift = translated
                    .iter()
                    .zip(&required)
                    .map(|(t, r)| (t - r).abs())
                    .collect();
                (translated, drift)
            }
            None => (Vec::new(), Vec::new()),
        };

        steps.push(HierarchyStep {
            k,
            l,
            energy_abs: member_sp.ground_energy,
            linear_coeff: member_sp.linear(),
            potential: member,
            dependent_params: required,
            translated,
            drift,
        });
    }
    Ok(HierarchyLadder {
        base: pot.clone(),
        steps,
    })
}

/// Closed-form ladder energies for the quartic and sextic families.
///
/// Quartic `(d, f) = (a_3, a_4)`: `A_1 = d / (2 sqrt f)`.
/// Sextic `(f, g, h) = (a_4, a_5, a_6)`: `A_1 = f/(2 sqrt h) - g^2/(8 h^(3/2))`.
/// Both give `E_k = -c^2 / (4 L^2) + A_1 (2L + 1 + 2k) + shift` with `L = l + k + 1`.
pub fn closed_form_energy(pot: &PolynomialCoulombPotential, k: usize) -> Result<f64> {
    let linear = match pot.n() {
        2 => {
            let (d, f) = (pot.coeff(3), pot.coeff(4));
            d / (2.0 * f.sqrt())
        }
        3 => {
            let (f, g, h) = (pot.coeff(4), pot.coeff(5), pot.coeff(6));
            f / (2.0 * h.sqrt()) - g * g / (8.0 * h.powf(1.5))
        }
        n => return Err(Error::UnsupportedDegree(n)),
    };
    let big_l = pot.l() as f64 + k as f64 + 1.0;
    let c = pot.c();
    Ok(
        -c * c / (4.0 * big_l * big_l)
            + linear * (2.0 * big_l + 1.0 + 2.0 * k as f64)
            + pot.shift(),
    )
}

#[derive(Debug, Clone, PartialEq)]
pub struct DriftRow {
    pub k: usize,
    /// One-based coefficient index `m` of `a_m`.
    pub coefficient: usize,
    pub translated: f64,
    pub required: f64,
    pub gap: f64,
}

pub fn drift_report(ladder: &HierarchyLadder) -> Vec<DriftRow> {
    ladder
        .steps
        .iter()
        .skip(1)
        .flat_map(|step| {
            step.translated
                .iter()
                .zip(&step.dependent_params)
                .enumerate()
                .map(move |(i, (&t, &r))| DriftRow {
                    k: step.k,
                    coefficient: i + 1,
                    translated: t,
                    required: r,
                    gap: (t - r).abs(),
                })
        })
        .collect()
}
