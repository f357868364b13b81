//! `key = value` run configuration with `#` comments.

use std::collections::HashMap;
use std::fmt::Write as _;

use ces_core::{Coulomb, PolynomialCoulombPotential, ShootingConfig, Superpotential};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum ConfigError {
    #[error("line {line}, column {col}: {msg}")]
    Syntax {
        line: usize,
        col: usize,
        msg: String,
    },
    #[error("line {line}, column {col}: unknown key `{key}`")]
    UnknownKey {
        line: usize,
        col: usize,
        key: String,
    },
    #[error("line {line}, column {col}: duplicate key `{key}` (first set on line {first})")]
    DuplicateKey {
        line: usize,
        col: usize,
        key: String,
        first: usize,
    },
    #[error("line {line}, column {col}: invalid value `{value}` for `{key}`")]
    BadValue {
        line: usize,
        col: usize,
        key: String,
        value: String,
    },
    #[error("missing required key `{0}`")]
    Missing(String),
    #[error("{0}")]
    Invalid(String),
}

/// Parsed configuration. Optional fields are `None` when absent from the file.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub n: usize,
    pub l: u32,
    pub c: f64,
    /// `a_1..a_{2n}`; the dependent `a_1..a_n` may be absent.
    pub coeffs: Vec<Option<f64>>,
    pub shift: Option<f64>,
    pub depth: Option<usize>,
    pub states: Option<usize>,
    pub r_start: Option<f64>,
    pub r_max: Option<f64>,
    pub step: Option<f64>,
    pub e_tol: Option<f64>,
    pub e_lo: Option<f64>,
    pub e_hi: Option<f64>,
}

/// What the configuration describes.
#[derive(Debug, Clone)]
pub enum Model {
    Polynomial(PolynomialCoulombPotential),
    /// `n = 0`: bare Coulomb, only meaningful for the shooting solver.
    Coulomb(Coulomb),
}

struct Entry<'a> {
    value: &'a str,
    line: usize,
    key_col: usize,
    value_col: usize,
}

const SOLVER_KEYS: [&str; 6] = ["r_start", "r_max", "step", "e_tol", "e_lo", "e_hi"];

impl RunConfig {
    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        let mut entries: HashMap<&str, Entry> = HashMap::new();
        let mut order = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let body = raw.split('#').next().unwrap_or("");
            if body.trim().is_empty() {
                continue;
            }
            let Some(eq) = body.find('=') else {
                let col = body.len() - body.trim_start().len() + 1;
                return Err(ConfigError::Syntax {
                    line,
                    col,
                    msg: "expected `key = value`".into(),
                });
            };
            let key_part = &body[..eq];
            let key = key_part.trim();
            let key_col = key_part.len() - key_part.trim_start().len() + 1;
            let value_part = &body[eq + 1..];
            let value = value_part.trim();
            let value_col = eq + 2 + value_part.len() - value_part.trim_start().len();
            if key.is_empty() {
                return Err(ConfigError::Syntax {
                    line,
                    col: key_col,
                    msg: "missing key before `=`".into(),
                });
            }
            if value.is_empty() {
                return Err(ConfigError::Syntax {
                    line,
                    col: value_col,
                    msg: format!("missing value for `{key}`"),
                });
            }
            if let Some(prev) = entries.get(key) {
                return Err(ConfigError::DuplicateKey {
                    line,
                    col: key_col,
                    key: key.into(),
                    first: prev.line,
                });
            }
            order.push(key);
            entries.insert(
                key,
                Entry {
                    value,
                    line,
                    key_col,
                    value_col,
                },
            );
        }

        let n: usize = take(&entries, "n")?.ok_or_else(|| ConfigError::Missing("n".into()))?;
        for key in &order {
            if !is_known(key, n) {
                let e = &entries[key];
                return Err(ConfigError::UnknownKey {
                    line: e.line,
                    col: e.key_col,
                    key: (*key).into(),
                });
            }
        }
        let l = take(&entries, "l")?.ok_or_else(|| ConfigError::Missing("l".into()))?;
        let c = take(&entries, "c")?.ok_or_else(|| ConfigError::Missing("c".into()))?;
        let mut coeffs = Vec::with_capacity(2 * n);
        for i in 1..=2 * n {
            let key = format!("a{i}");
            let value = take(&entries, &key)?;
            if i > n && value.is_none() {
                return Err(ConfigError::Missing(key));
            }
            coeffs.push(value);
        }
        Ok(RunConfig {
            n,
            l,
            c,
            coeffs,
            shift: take(&entries, "shift")?,
            depth: take(&entries, "depth")?,
            states: take(&entries, "states")?,
            r_start: take(&entries, "r_start")?,
            r_max: take(&entries, "r_max")?,
            step: take(&entries, "step")?,
            e_tol: take(&entries, "e_tol")?,
            e_lo: take(&entries, "e_lo")?,
            e_hi: take(&entries, "e_hi")?,
        })
    }

    /// Canonical text form; floats use the shortest representation that
    /// parses back to the same value.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "n = {}", self.n);
        let _ = writeln!(out, "l = {}", self.l);
        let _ = writeln!(out, "c = {:?}", self.c);
        for (i, a) in self.coeffs.iter().enumerate() {
            if let Some(a) = a {
                let _ = writeln!(out, "a{} = {a:?}", i + 1);
            }
        }
        if let Some(v) = self.shift {
            let _ = writeln!(out, "shift = {v:?}");
        }
        if let Some(v) = self.depth {
            let _ = writeln!(out, "depth = {v}");
        }
        if let Some(v) = self.states {
            let _ = writeln!(out, "states = {v}");
        }
        let solver = [
            self.r_start,
            self.r_max,
            self.step,
            self.e_tol,
            self.e_lo,
            self.e_hi,
        ];
        for (key, value) in SOLVER_KEYS.iter().zip(solver) {
            if let Some(v) = value {
                let _ = writeln!(out, "{key} = {v:?}");
            }
        }
        out
    }

    /// Missing dependent coefficients are filled with the constraint values.
    pub fn model(&self) -> Result<Model, ConfigError> {
        if self.n == 0 {
            return Ok(Model::Coulomb(Coulomb {
                l: self.l,
                c: self.c,
            }));
        }
        let zeros: Vec<f64> = self.coeffs.iter().map(|a| a.unwrap_or(0.0)).collect();
        let base = PolynomialCoulombPotential::new(self.l, self.c, zeros)
            .map_err(|e| ConfigError::Invalid(e.to_string()))?;
        let sp = Superpotential::solve(&base);
        let dependent: Vec<f64> = (1..=self.n)
            .map(|m| self.coeffs[m - 1].unwrap_or_else(|| sp.required_coeff(m)))
            .collect();
        let pot = base
            .with_dependent(&dependent)
            .with_shift(self.shift.unwrap_or(0.0));
        Ok(Model::Polynomial(pot))
    }

    pub fn potential(&self) -> Result<PolynomialCoulombPotential, ConfigError> {
        match self.model()? {
            Model::Polynomial(p) => Ok(p),
            Model::Coulomb(_) => Err(ConfigError::Invalid(
                "n = 0 (bare Coulomb) is only supported by `shoot`".into(),
            )),
        }
    }

    pub fn shooting(&self) -> ShootingConfig {
        let mut cfg = ShootingConfig::default();
        if let Some(v) = self.r_start {
            cfg.r_start = v;
        }
        if let Some(v) = self.step {
            cfg.step = v;
        }
        if let Some(v) = self.e_tol {
            cfg.e_tol = v;
        }
        cfg.r_max = self.r_max.or(cfg.r_max);
        cfg.e_lo = self.e_lo.or(cfg.e_lo);
        cfg.e_hi = self.e_hi.or(cfg.e_hi);
        cfg
    }
}

fn is_known(key: &str, n: usize) -> bool {
    if matches!(key, "n" | "l" | "c" | "shift" | "depth" | "states") || SOLVER_KEYS.contains(&key) {
        return true;
    }
    key.strip_prefix('a')
        .filter(|digits| !digits.starts_with('0'))
        .and_then(|digits| digits.parse::<usize>().ok())
        .is_some_and(|i| (1..=2 * n).contains(&i))
}

fn take<T: std::str::FromStr>(
    entries: &HashMap<&str, Entry>,
    key: &str,
) -> Result<Option<T>, ConfigError> {
    let Some(e) = entries.get(key) else {
        return Ok(None);
    };
    e.value
        .parse()
        .map(Some)
        .map_err(|_| ConfigError::BadValue {
            line: e.line,
            col: e.value_col,
            key: key.into(),
            value: e.value.into(),
        })
}
