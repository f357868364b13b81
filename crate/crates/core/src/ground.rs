//! Closed-form ground state from `A psi0 = 0`:
//! `psi0(r) = N0 r^B exp(-D r - sum_i A_i r^(i+1)/(i+1))`.

use crate::error::{Error, Result};
use crate::potential::PolynomialCoulombPotential;
use crate::superpotential::{constraint_report, Superpotential, DEFAULT_CONSTRAINT_TOL};

/// Number of Simpson panels used for the normalization integral.
const QUAD_PANELS: usize = 20_000;

#[derive(Debug, Clone, PartialEq)]
pub struct GroundWavefunction {
    pub b: f64,
    pub d: f64,
    /// `A_i / (i+1)`, coefficient of `r^(i+1)` in the exponent.
    pub poly_decay: Vec<f64>,
    log_norm: f64,
}

impl GroundWavefunction {
    pub fn from_superpotential(sp: &Superpotential) -> Self {
        let poly_decay =
            sp.a.iter()
                .enumerate()
                .map(|(i, a)| a / (i + 2) as f64)
                .collect();
        let mut wf = Self {
            b: sp.b,
            d: sp.d,
            poly_decay,
            log_norm: 0.0,
        };
        wf.log_norm = -0.5 * wf.log_norm_integral();
        wf
    }

    /// `ln psi` without the normalization constant; `-inf` at `r = 0`.
    pub fn log_shape(&self, r: f64) -> f64 {
        let poly = self
            .poly_decay
            .iter()
            .rev()
            .fold(0.0, |acc, &x| (acc + x) * r)
            * r;
        self.b * r.ln() - self.d * r - poly
    }

    pub fn norm(&self) -> f64 {
        self.log_norm.exp()
    }

    pub fn log_norm(&self) -> f64 {
        self.log_norm
    }

    pub fn eval(&self, r: f64) -> f64 {
        if r <= 0.0 {
            return 0.0;
        }
        (self.log_norm + self.log_shape(r)).exp()
    }

    /// Outer radius beyond which `psi^2` is below `e^-100` of its peak.
    pub fn cutoff_radius(&self) -> f64 {
        let mut r = 1e-3;
        let mut peak = f64::NEG_INFINITY;
        loop {
            let s = self.log_shape(r);
            peak = peak.max(s);
            if 2.0 * (peak - s) > 100.0 && s < peak {
                return r;
            }
            r *= 1.01;
            if r > 1e6 {
                return r;
            }
        }
    }

    /// `ln ∫ exp(2 log_shape) dr`, scaled by the peak to avoid overflow.
    fn log_norm_integral(&self) -> f64 {
        let r_cut = self.cutoff_radius();
        let h = r_cut / QUAD_PANELS as f64;
        let peak = (1..=QUAD_PANELS)
            .map(|i| self.log_shape(h * i as f64))
            .fold(f64::NEG_INFINITY, f64::max);
        let f = |r: f64| {
            if r <= 0.0 {
                0.0
            } else {
                (2.0 * (self.log_shape(r) - peak)).exp()
            }
        };
        let mut sum = f(0.0) + f(r_cut);
        for i in 1..QUAD_PANELS {
            let w = if i % 2 == 1 { 4.0 } else { 2.0 };
            sum += w * f(h * i as f64);
        }
        (sum * h / 3.0).ln() + 2.0 * peak
    }

    /// Human-readable formula with the numeric coefficients filled in.
    pub fn formula(&self) -> String {
        let mut s = format!("psi0(r) = {:.6e} * r^{} * exp(", self.norm(), self.b);
        s.push_str(&format!("{:+.6} r", -self.d));
        for (i, p) in self.poly_decay.iter().enumerate() {
            s.push_str(&format!(" {:+.6} r^{}", -p, i + 2));
        }
        s.push(')');
        s
    }
}

/// Ground energy and normalized wavefunction; fails unless the dependent
/// coefficients satisfy the constraints within the default tolerance.
pub fn ground_state(pot: &PolynomialCoulombPotential) -> Result<(f64, GroundWavefunction)> {
    let sp = Superpotential::solve(pot);
    let report = constraint_report(pot, &sp, DEFAULT_CONSTRAINT_TOL);
    if !report.satisfied {
        return Err(Error::ConstraintsNotSatisfied(Box::new(report)));
    }
    Ok((
        sp.ground_energy,
        GroundWavefunction::from_superpotential(&sp),
    ))
}
