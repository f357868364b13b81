//! The two quartic benchmark parameter sets and their published tables.
//!
//! Dependent coefficients are printed truncated (not rounded) to four
//! decimals, three for SET II `a`; energies are rounded to two decimals.

use crate::potential::PolynomialCoulombPotential;
use crate::superpotential::constrained;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuarticSet {
    pub name: &'static str,
    pub l: u32,
    pub c: f64,
    pub d: f64,
    pub f: f64,
    /// `(a, b)` per hierarchy member `V1, V2, V3` as printed, with decimals.
    pub table_one: [[(f64, u32); 2]; 3],
    /// Analytic ladder energies of `V1, V2, V3`.
    pub ladder: [f64; 3],
    /// Numeric levels of `V1` (three), `V2` (two), `V3` (one).
    pub numeric_v1: [f64; 3],
    pub numeric_v2: [f64; 2],
    pub numeric_v3: f64,
}

impl QuarticSet {
    /// Base potential with `a`, `b` set from the constraints.
    pub fn potential(&self) -> PolynomialCoulombPotential {
        let raw = PolynomialCoulombPotential::quartic(self.l, self.c, 0.0, 0.0, self.d, self.f)
            .expect("benchmark set is confining");
        constrained(&raw)
    }
}

pub const SET_I: QuarticSet = QuarticSet {
    name: "SET I",
    l: 1,
    c: -1.0,
    d: 0.5,
    f: 0.1,
    table_one: [
        [(-1.5020, 4), (0.7831, 4)],
        [(-2.2662, 4), (0.7304, 4)],
        [(-2.9646, 4), (0.7040, 4)],
    ],
    ladder: [3.89, 7.09, 10.26],
    numeric_v1: [3.89, 7.06, 10.15],
    numeric_v2: [7.08, 10.23],
    numeric_v3: 10.24,
};

pub const SET_II: QuarticSet = QuarticSet {
    name: "SET II",
    l: 1,
    c: -0.1,
    d: 0.3,
    f: 0.07,
    table_one: [
        [(-1.559, 3), (0.3346, 4)],
        [(-2.0977, 4), (0.3302, 4)],
        [(-2.6315, 4), (0.3280, 4)],
    ],
    ladder: [2.83, 5.10, 7.37],
    numeric_v1: [2.83, 5.06, 7.34],
    numeric_v2: [5.09, 7.35],
    numeric_v3: 7.36,
};

pub const SETS: [QuarticSet; 2] = [SET_I, SET_II];

/// Tolerance on numeric levels, in energy units.
pub const NUMERIC_TOL: f64 = 0.01;

/// `value` truncated toward zero to `decimals` places equals `printed`.
pub fn matches_truncated(value: f64, printed: f64, decimals: u32) -> bool {
    let scale = 10f64.powi(decimals as i32);
    (value * scale).trunc() == (printed * scale).round()
}

/// `value` rounded to `decimals` places equals `printed`.
pub fn matches_rounded(value: f64, printed: f64, decimals: u32) -> bool {
    let scale = 10f64.powi(decimals as i32);
    (value * scale).round() == (printed * scale).round()
}
