use thiserror::Error;

use crate::superpotential::ConstraintReport;

#[derive(Debug, Error)]
pub enum Error {
    #[error("polynomial part must have a positive even number of coefficients, got {0}")]
    InvalidDegree(usize),

    #[error("leading coefficient a_{index} = {value} must be positive for a confining potential")]
    NonConfining { index: usize, value: f64 },

    #[error("parameter `{0}` is not finite")]
    NonFinite(&'static str),

    #[error(
        "constraint conditions violated: max |supplied - required| = {:.3e} > {:.1e}",
        .0.max_residual(),
        .0.tolerance
    )]
    ConstraintsNotSatisfied(Box<ConstraintReport>),

    #[error("radius r = {0} is not strictly positive")]
    NonPositiveRadius(f64),

    #[error("partner differs from the translated potential by a non-constant amount (max deviation {max_deviation:.3e} > {tolerance:.1e})")]
    ShapeInvarianceViolation { max_deviation: f64, tolerance: f64 },

    #[error("closed-form ladder energies exist for n = 2 and n = 3 only, got n = {0}")]
    UnsupportedDegree(usize),

    #[error("ladder depth {depth} exceeds the cap of {cap}")]
    DepthExceeded { depth: usize, cap: usize },

    #[error("invalid shooting configuration: {0}")]
    InvalidConfig(String),

    #[error(
        "no energy bracket for state {state}: nodes({e_lo:.6}) = {nodes_lo}, nodes({e_hi:.6}) = {nodes_hi}"
    )]
    BracketNotFound {
        state: usize,
        e_lo: f64,
        e_hi: f64,
        nodes_lo: usize,
        nodes_hi: usize,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
