//! Angle-dependent surface tension and stiffness.
//!
//! `tau(theta) = cos theta * gamma(i nu(theta)) + sin theta * nu(theta)`.
//!
//! Differentiating twice along the saddle manifold gives the closed form for
//! the stiffness,
//!
//! ```text
//! tau + tau'' = sec^3 theta / gamma''(i nu(theta)),
//! ```
//!
//! which `stiffness` returns after checking it against a centered finite
//! difference of `tau` itself.

use crate::error::{Error, Result};
use crate::exact::saddle::solve_saddle;
use crate::exact::Couplings;
use crate::scalar::Scalar;

/// Angular margin kept from `pi/2`, where tension and stiffness blow up.
const THETA_MARGIN: f64 = 0.05;

/// Finite-difference step for the stiffness cross-check; h^2-truncation and
/// round-off balance near 1e-4 for these magnitudes.
const FD_STEP: f64 = 1e-4;

/// Relative disagreement between the two stiffness routes that is treated as
/// an internal bug.
const STIFFNESS_TOL: f64 = 1e-6;

/// `tau(theta)` for `|theta| < pi/2`.
pub fn surface_tension<S: Scalar>(theta: S, c: &Couplings<S>) -> Result<S> {
    let s = solve_saddle(theta, c)?;
    Ok(theta.cos() * s.gamma_at_saddle + theta.sin() * s.nu)
}

/// Surface stiffness `tau + tau''` at `theta`, `|theta| < pi/2 - margin`.
///
/// Evaluates both the saddle-point identity and a centered second difference
/// of `surface_tension`; they must agree to 1e-6 relative or an
/// inconsistency error is raised. The identity value is returned.
pub fn stiffness<S: Scalar>(theta: S, c: &Couplings<S>) -> Result<S> {
    let margin = S::of(THETA_MARGIN);
    if !(theta.abs() < S::FRAC_PI_2() - margin) {
        return Err(Error::domain(format!(
            "stiffness: |theta| = {:?} within margin {:?} of pi/2",
            theta.abs(),
            margin
        )));
    }
    let s = solve_saddle(theta, c)?;
    let sec = theta.cos().recip();
    let identity = sec * sec * sec / s.gamma2_at_saddle;

    let h = S::of(FD_STEP);
    let tau = surface_tension(theta, c)?;
    let tau_plus = surface_tension(theta + h, c)?;
    let tau_minus = surface_tension(theta - h, c)?;
    let tau2 = (tau_plus - S::of(2.0) * tau + tau_minus) / (h * h);
    let fd = tau + tau2;

    let rel = ((fd - identity) / identity).abs();
    let tol = S::of(STIFFNESS_TOL).max(S::epsilon().sqrt());
    if rel > tol {
        return Err(Error::Inconsistency(format!(
            "stiffness routes disagree at theta={:?}: identity={:?}, finite-difference={:?} (rel {:?})",
            theta, identity, fd, rel
        )));
    }
    Ok(identity)
}

/// One row of a tension table.
#[derive(Debug, Clone, Copy)]
pub struct TensionRow<S = f64> {
    pub theta: S,
    pub nu: S,
    pub tau: S,
    pub stiffness: S,
    /// `z_scaling` evaluated at `alpha = 1`.
    pub z_unit: S,
}

/// Tension and stiffness along a grid of angles.
#[derive(Debug, Clone)]
pub struct TensionCurve<S = f64> {
    pub rows: Vec<TensionRow<S>>,
}

impl<S: Scalar> TensionCurve<S> {
    pub fn thetas(&self) -> impl Iterator<Item = S> + '_ {
        self.rows.iter().map(|r| r.theta)
    }
}

/// Evaluate tension, stiffness and the unit profile scale on an angle grid.
/// Angles at or beyond `pi/2 - margin` are rejected.
pub fn tension_curve<S: Scalar>(thetas: &[S], c: &Couplings<S>) -> Result<TensionCurve<S>> {
    let mut rows = Vec::with_capacity(thetas.len());
    for &theta in thetas {
        let s = solve_saddle(theta, c)?;
        let tau = theta.cos() * s.gamma_at_saddle + theta.sin() * s.nu;
        let kappa = stiffness(theta, c)?;
        let z_unit = (theta.cos().recip() * kappa).sqrt();
        rows.push(TensionRow {
            theta,
            nu: s.nu,
            tau,
            stiffness: kappa,
            z_unit,
        });
    }
    Ok(TensionCurve { rows })
}
