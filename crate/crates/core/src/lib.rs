//! Conditionally exactly solvable radial potentials
//! `l(l+1)/r^2 + c/r + sum_{i=1}^{2n} a_i r^i` via SUSY factorization.
//!
//! [`superpotential`] solves the Riccati coefficient matching and the
//! constraint conditions on `a_1..a_n`, [`ground`] builds the closed-form
//! ground state, [`partner`] the SUSY partner and shape-invariance witness,
//! [`hierarchy`] the ladder of partner members, and [`radial`] an independent
//! RK4 shooting solver used to cross-check all of the above.

pub mod error;
pub mod ground;
pub mod hierarchy;
pub mod partner;
pub mod potential;
pub mod published;
pub mod radial;
pub mod superpotential;

pub use error::{Error, Result};
pub use ground::{ground_state, GroundWavefunction};
pub use hierarchy::{
    build_ladder, build_ladder_with_cap, closed_form_energy, drift_report, DriftRow,
    HierarchyLadder, HierarchyStep, DEFAULT_MAX_DEPTH,
};
pub use partner::{partner_potential, shape_invariance_check, ShapeInvarianceWitness};
pub use potential::PolynomialCoulombPotential;
pub use radial::{
    find_eigenvalue, integrate_outward, spectrum, Coulomb, EigenResult, RadialPotential,
    ShootingConfig, Shot,
};
pub use superpotential::{
    constrained, constraint_report, linear_grid, riccati_residual, solve_superpotential,
    ConstraintReport, Superpotential, DEFAULT_CONSTRAINT_TOL,
};
