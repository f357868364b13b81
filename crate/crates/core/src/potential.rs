//! Radial potentials of the form
//!
//! ```text
//! V(r) = l(l+1)/r^2 + c/r + a_1 r + a_2 r^2 + ... + a_{2n} r^{2n} + shift
//! ```
//!
//! The coefficients `a_1..a_n` are the *dependent* ones (fixed by the
//! solvability constraints), `a_{n+1}..a_{2n}` together with `l` and `c` are
//! the *independent* ones.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct PolynomialCoulombPotential {
    l: u32,
    c: f64,
    coeffs: Vec<f64>,
    shift: f64,
}

impl PolynomialCoulombPotential {
    /// `coeffs[i]` is the coefficient of `r^(i+1)`; the length must be `2n`
    /// with `n >= 1` and the last entry strictly positive.
    pub fn new(l: u32, c: f64, coeffs: Vec<f64>) -> Result<Self> {
        if coeffs.is_empty() || coeffs.len() % 2 != 0 {
            return Err(Error::InvalidDegree(coeffs.len()));
        }
        if !c.is_finite() {
            return Err(Error::NonFinite("c"));
        }
        if coeffs.iter().any(|a| !a.is_finite()) {
            return Err(Error::NonFinite("a_i"));
        }
        let lead = coeffs[coeffs.len() - 1];
        if lead <= 0.0 {
            return Err(Error::NonConfining {
                index: coeffs.len(),
                value: lead,
            });
        }
        if c > 0.0 {
            log::warn!("repulsive Coulomb coefficient c = {c}: the linear superpotential term D is negative");
        }
        Ok(Self {
            l,
            c,
            coeffs,
            shift: 0.0,
        })
    }

    /// Quartic case: `a r + b r^2 + d r^3 + f r^4`.
    pub fn quartic(l: u32, c: f64, a: f64, b: f64, d: f64, f: f64) -> Result<Self> {
        Self::new(l, c, vec![a, b, d, f])
    }

    /// Sextic case: `a r + b r^2 + d r^3 + f r^4 + g r^5 + h r^6`.
    #[allow(clippy::too_many_arguments)]
    pub fn sextic(l: u32, c: f64, a: f64, b: f64, d: f64, f: f64, g: f64, h: f64) -> Result<Self> {
        Self::new(l, c, vec![a, b, d, f, g, h])
    }

    pub fn with_shift(mut self, shift: f64) -> Self {
        self.shift = shift;
        self
    }

    pub fn with_l(&self, l: u32) -> Self {
        Self { l, ..self.clone() }
    }

    /// Replace the dependent coefficients `a_1..a_n`.
    ///
    /// Panics if `dependent.len() != n`.
    pub fn with_dependent(&self, dependent: &[f64]) -> Self {
        assert_eq!(
            dependent.len(),
            self.n(),
            "expected n dependent coefficients"
        );
        let mut out = self.clone();
        out.coeffs[..self.n()].copy_from_slice(dependent);
        out
    }

    /// Half degree `n`; the polynomial part has degree `2n`.
    pub fn n(&self) -> usize {
        self.coeffs.len() / 2
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn shift(&self) -> f64 {
        self.shift
    }

    /// All polynomial coefficients, `coeffs()[i]` multiplies `r^(i+1)`.
    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// One-based access: `coeff(i)` is `a_i`, zero outside `1..=2n`.
    pub fn coeff(&self, i: usize) -> f64 {
        if i == 0 {
            return 0.0;
        }
        self.coeffs.get(i - 1).copied().unwrap_or(0.0)
    }

    pub fn dependent(&self) -> &[f64] {
        &self.coeffs[..self.n()]
    }

    pub fn independent(&self) -> &[f64] {
        &self.coeffs[self.n()..]
    }

    pub fn centrifugal(&self) -> f64 {
        let l = self.l as f64;
        l * (l + 1.0)
    }

    /// Polynomial part plus shift, without the `1/r^2` and `1/r` terms.
    pub fn polynomial_part(&self, r: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &a| (acc + a) * r) + self.shift
    }

    pub fn eval(&self, r: f64) -> f64 {
        self.centrifugal() / (r * r) + self.c / r + self.polynomial_part(r)
    }
}
