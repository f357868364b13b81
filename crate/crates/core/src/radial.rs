//! Numerical radial solver for `-u'' + V(r) u = E u`.
//!
//! Outward RK4 shooting from the regular series start `u ~ r^(l+1)`, with the
//! Sturm node count of `u` on `(r_start, r_max]` used to bracket and bisect
//! each level. Independent of the closed-form machinery in the rest of the
//! crate, so it can serve as a cross-check.

use crate::error::{Error, Result};
use crate::potential::PolynomialCoulombPotential;

const OVERFLOW: f64 = 1e250;
const RESCALE: f64 = 1e-250;
const R_MAX_FLOOR: f64 = 5.0;
const R_MAX_CAP: f64 = 50.0;
const TURNING_MARGIN: f64 = 25.0;
const BRACKET_WIDENINGS: usize = 10;
const TAIL_FLOOR: f64 = 1e-6;

/// Anything the shooting solver can integrate.
pub trait RadialPotential {
    fn angular_momentum(&self) -> u32;

    /// Full effective potential, centrifugal term included.
    fn value(&self, r: f64) -> f64;

    /// An energy no bound state lies below.
    fn energy_floor(&self) -> f64;
}

/// Lowest level of `-u'' + (l(l+1)/r^2 + c/r) u`, zero when repulsive.
fn coulomb_floor(l: u32, c: f64) -> f64 {
    if c < 0.0 {
        let n = l as f64 + 1.0;
        -c * c / (4.0 * n * n)
    } else {
        0.0
    }
}

impl RadialPotential for PolynomialCoulombPotential {
    fn angular_momentum(&self) -> u32 {
        self.l()
    }

    fn value(&self, r: f64) -> f64 {
        self.eval(r)
    }

    // Operator bound: H >= H_coulomb + min_r P(r).
    fn energy_floor(&self) -> f64 {
        let poly_min = (0..=5000)
            .map(|i| self.polynomial_part(i as f64 * 0.01))
            .fold(f64::INFINITY, f64::min);
        coulomb_floor(self.l(), self.c()) + poly_min - 1.0
    }
}

/// Bare Coulomb problem `l(l+1)/r^2 + c/r`; levels `-c^2 / (4 (l+1+k)^2)` for `c < 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Coulomb {
    pub l: u32,
    pub c: f64,
}

impl RadialPotential for Coulomb {
    fn angular_momentum(&self) -> u32 {
        self.l
    }

    fn value(&self, r: f64) -> f64 {
        let l = self.l as f64;
        l * (l + 1.0) / (r * r) + self.c / r
    }

    fn energy_floor(&self) -> f64 {
        coulomb_floor(self.l, self.c) - 1.0
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ShootingConfig {
    pub r_start: f64,
    /// `None` picks the smallest `r` past which `V >= E_max + 25`, within `[5, 50]`.
    pub r_max: Option<f64>,
    pub step: f64,
    pub e_lo: Option<f64>,
    pub e_hi: Option<f64>,
    pub e_tol: f64,
    pub max_iter: usize,
}

impl Default for ShootingConfig {
    fn default() -> Self {
        Self {
            r_start: 1e-4,
            r_max: None,
            step: 1e-3,
            e_lo: None,
            e_hi: None,
            e_tol: 1e-8,
            max_iter: 200,
        }
    }
}

impl ShootingConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidConfig(msg));
        if !(self.r_start > 0.0) {
            return bad(format!("r_start must be positive, got {}", self.r_start));
        }
        if !(self.step > 0.0) {
            return bad(format!("step must be positive, got {}", self.step));
        }
        if let Some(r_max) = self.r_max {
            if !(r_max > self.r_start) {
                return bad(format!(
                    "r_max = {r_max} must exceed r_start = {}",
                    self.r_start
                ));
            }
        }
        if let (Some(lo), Some(hi)) = (self.e_lo, self.e_hi) {
            if !(lo < hi) {
                return bad(format!("e_lo = {lo} must be below e_hi = {hi}"));
            }
        }
        if !(self.e_tol > 0.0) {
            return bad(format!("e_tol must be positive, got {}", self.e_tol));
        }
        Ok(())
    }

    pub fn resolve_r_max<P: RadialPotential + ?Sized>(&self, pot: &P, e_max: f64) -> f64 {
        self.r_max.unwrap_or_else(|| auto_r_max(pot, e_max))
    }
}

fn auto_r_max<P: RadialPotential + ?Sized>(pot: &P, e_max: f64) -> f64 {
    let target = e_max + TURNING_MARGIN;
    let dr = 0.01;
    let steps = ((R_MAX_CAP - R_MAX_FLOOR) / dr).round() as usize;
    if pot.value(R_MAX_CAP) < target {
        return R_MAX_CAP;
    }
    let mut i = 0;
    while i < steps && pot.value(R_MAX_CAP - (i + 1) as f64 * dr) >= target {
        i += 1;
    }
    R_MAX_CAP - i as f64 * dr
}

#[derive(Debug, Clone, PartialEq)]
pub struct Shot {
    /// `(r, u)` pairs; empty unless samples were requested.
    pub samples: Vec<(f64, f64)>,
    pub nodes: usize,
    pub u_end: f64,
    pub du_end: f64,
    pub r_max: f64,
}

fn shoot<P: RadialPotential + ?Sized>(
    pot: &P,
    energy: f64,
    r_start: f64,
    r_max: f64,
    step: f64,
    record: bool,
) -> Shot {
    let lp1 = pot.angular_momentum() as f64 + 1.0;
    let mut r = r_start;
    let mut u = r.powf(lp1);
    let mut du = lp1 * r.powf(lp1 - 1.0);
    let mut samples = Vec::new();
    if record {
        samples.push((r, u));
    }
    let k = |r: f64| pot.value(r) - energy;

    let mut nodes = 0;
    let mut last_sign = u.signum();
    while r < r_max {
        // graded steps keep h^2 l(l+1)/r^2 small near the origin
        let h = step.min(0.1 * r).min(r_max - r);
        let mid = r + 0.5 * h;
        let k0 = k(r);
        let km = k(mid);
        let k1 = k(r + h);

        let (u1, v1) = (du, k0 * u);
        let (u2, v2) = (du + 0.5 * h * v1, km * (u + 0.5 * h * u1));
        let (u3, v3) = (du + 0.5 * h * v2, km * (u + 0.5 * h * u2));
        let (u4, v4) = (du + h * v3, k1 * (u + h * u3));
        u += h / 6.0 * (u1 + 2.0 * u2 + 2.0 * u3 + u4);
        du += h / 6.0 * (v1 + 2.0 * v2 + 2.0 * v3 + v4);
        r += h;

        if u.abs() > OVERFLOW {
            u *= RESCALE;
            du *= RESCALE;
            for s in &mut samples {
                s.1 *= RESCALE;
            }
        }
        if u != 0.0 {
            let sign = u.signum();
            if sign != last_sign {
                nodes += 1;
                last_sign = sign;
            }
        }
        if record {
            samples.push((r, u));
        }
    }
    Shot {
        samples,
        nodes,
        u_end: u,
        du_end: du,
        r_max,
    }
}

/// One outward integration at fixed energy, keeping the samples.
pub fn integrate_outward<P: RadialPotential + ?Sized>(
    pot: &P,
    energy: f64,
    cfg: &ShootingConfig,
) -> Result<Shot> {
    cfg.validate()?;
    let r_max = cfg.resolve_r_max(pot, energy);
    Ok(shoot(pot, energy, cfg.r_start, r_max, cfg.step, true))
}

#[derive(Debug, Clone, PartialEq)]
pub struct EigenResult {
    pub state: usize,
    pub energy: f64,
    /// Interior nodes of the returned (tail-trimmed) wavefunction.
    pub nodes: usize,
    pub converged: bool,
    pub iterations: usize,
    pub r_max: f64,
    /// `(r, u)` normalized so that the trapezoid sum of `u^2` is one.
    pub wf_samples: Vec<(f64, f64)>,
}

fn count_nodes(samples: &[(f64, f64)]) -> usize {
    // sign changes between samples that are not negligible next to the peak
    let peak = samples.iter().fold(0.0f64, |m, s| m.max(s.1.abs()));
    let mut nodes = 0;
    let mut last = 0.0f64;
    for &(_, u) in samples {
        if u.abs() <= TAIL_FLOOR * peak {
            continue;
        }
        if last != 0.0 && u.signum() != last.signum() {
            nodes += 1;
        }
        last = u;
    }
    nodes
}

/// Trapezoid rule for `∫ u^2 dr` on possibly non-uniform samples.
pub fn trapezoid_norm(samples: &[(f64, f64)]) -> f64 {
    samples
        .windows(2)
        .map(|w| 0.5 * (w[1].0 - w[0].0) * (w[0].1 * w[0].1 + w[1].1 * w[1].1))
        .sum()
}

/// Drops the tail where the energy mismatch makes `|u|` grow again, then the
/// negligible samples before it (where the boundary zero at `r_max` sits).
fn trim_tail(samples: &mut Vec<(f64, f64)>) {
    let mut end = samples.len();
    while end > 1 && samples[end - 2].1.abs() < samples[end - 1].1.abs() {
        end -= 1;
    }
    samples.truncate(end);
    let peak = samples.iter().fold(0.0f64, |m, s| m.max(s.1.abs()));
    while samples.len() > 1 && samples[samples.len() - 1].1.abs() < TAIL_FLOOR * peak {
        samples.pop();
    }
}

pub fn find_eigenvalue<P: RadialPotential + ?Sized>(
    pot: &P,
    state: usize,
    cfg: &ShootingConfig,
) -> Result<EigenResult> {
    cfg.validate()?;
    let mut lo = cfg.e_lo.unwrap_or_else(|| pot.energy_floor());
    let mut hi = cfg.e_hi.unwrap_or(lo + 16.0);
    let nodes_at = |e: f64, r_max: f64| shoot(pot, e, cfg.r_start, r_max, cfg.step, false).nodes;

    let mut r_max = cfg.resolve_r_max(pot, hi);
    let mut n_lo = nodes_at(lo, r_max);
    let mut n_hi = nodes_at(hi, r_max);
    let mut widenings = 0;
    while (n_lo > state || n_hi <= state) && widenings < BRACKET_WIDENINGS {
        let width = hi - lo;
        if n_lo > state {
            lo -= width;
        }
        if n_hi <= state {
            hi += width;
        }
        r_max = cfg.resolve_r_max(pot, hi);
        n_lo = nodes_at(lo, r_max);
        n_hi = nodes_at(hi, r_max);
        widenings += 1;
    }
    if n_lo > state || n_hi <= state {
        return Err(Error::BracketNotFound {
            state,
            e_lo: lo,
            e_hi: hi,
            nodes_lo: n_lo,
            nodes_hi: n_hi,
        });
    }

    let mut iterations = 0;
    while hi - lo > cfg.e_tol && iterations < cfg.max_iter {
        let mid = 0.5 * (lo + hi);
        if nodes_at(mid, r_max) <= state {
            lo = mid;
        } else {
            hi = mid;
        }
        iterations += 1;
    }
    let converged = hi - lo <= cfg.e_tol;
    let energy = 0.5 * (lo + hi);

    let mut samples = shoot(pot, energy, cfg.r_start, r_max, cfg.step, true).samples;
    trim_tail(&mut samples);
    let norm = trapezoid_norm(&samples).sqrt();
    if norm > 0.0 {
        for s in &mut samples {
            s.1 /= norm;
        }
    }
    Ok(EigenResult {
        state,
        energy,
        nodes: count_nodes(&samples),
        converged,
        iterations,
        r_max,
        wf_samples: samples,
    })
}

/// Levels `0..n_states`; each entry fails or succeeds on its own.
pub fn spectrum<P: RadialPotential + Sync + ?Sized>(
    pot: &P,
    n_states: usize,
    cfg: &ShootingConfig,
) -> Vec<Result<EigenResult>> {
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..n_states)
            .map(|k| scope.spawn(move || find_eigenvalue(pot, k, cfg)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("eigenvalue worker panicked"))
            .collect()
    })
}
