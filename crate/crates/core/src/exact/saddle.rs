//! The tilt saddle point `gamma'(i nu(theta)) = i tan theta`.
//!
//! With `cosh gamma = A - B cos w`, the derivative on the imaginary axis is
//! `gamma'(i nu) = i B sinh nu / sinh gamma(i nu)`, so the saddle condition
//! reduces to the real equation
//!
//! ```text
//! B sinh nu = tan theta * sinh gamma(i nu),
//! ```
//!
//! whose left side increases and right side decreases in `nu`: there is a
//! unique root in `[0, nu_max)` for every `0 <= theta < pi/2`.

use crate::error::{Error, Result};
use crate::exact::dispersion::{dispersion_constants, gamma2_imag, gamma_imag, nu_max};
use crate::exact::Couplings;
use crate::numeric::bisect;
use crate::scalar::Scalar;

/// Saddle data at tilt angle `theta`: the location `nu(theta)` and the
/// dispersion values entering tension, stiffness and the profile scale.
#[derive(Debug, Clone, Copy)]
pub struct SaddleSolution<S = f64> {
    pub theta: S,
    /// Saddle location; its sign follows `theta`.
    pub nu: S,
    /// `gamma(i nu(theta))`.
    pub gamma_at_saddle: S,
    /// `gamma''(i nu(theta))`, always positive below the branch point.
    pub gamma2_at_saddle: S,
}

impl<S: Scalar> SaddleSolution<S> {
    /// Residual of the saddle equation in cross-multiplied form,
    /// `B sinh nu - tan theta sinh gamma(i nu)`.
    pub fn residual(&self, c: &Couplings<S>) -> S {
        let (_, b) = dispersion_constants(c);
        b * self.nu.sinh() - self.theta.tan() * self.gamma_at_saddle.sinh()
    }
}

/// Solve the saddle equation for `|theta| < pi/2` on subcritical couplings.
pub fn solve_saddle<S: Scalar>(theta: S, c: &Couplings<S>) -> Result<SaddleSolution<S>> {
    c.require_subcritical()?;
    let half_pi = S::FRAC_PI_2();
    if !(theta.abs() < half_pi) {
        return Err(Error::domain(format!(
            "solve_saddle: |theta| = {:?} not strictly inside pi/2",
            theta.abs()
        )));
    }

    if theta == S::zero() {
        return Ok(SaddleSolution {
            theta,
            nu: S::zero(),
            gamma_at_saddle: gamma_imag(S::zero(), c)?,
            gamma2_at_saddle: gamma2_imag(S::zero(), c)?,
        });
    }

    let tan_abs = theta.tan().abs();
    let (_, b) = dispersion_constants(c);
    let bound = nu_max(c)?;

    // f is strictly increasing on [0, nu_max): negative at 0, positive as
    // gamma(i nu) -> 0 at the branch point. Stay a hair inside the branch
    // point so gamma_imag stays real on the bracket.
    let hi = bound * (S::one() - S::of(1e-15));
    let f = |nu: S| {
        let g = gamma_imag(nu, c).unwrap_or_else(|_| S::zero());
        b * nu.sinh() - tan_abs * g.sinh()
    };
    if f(hi) <= S::zero() {
        return Err(Error::numerical(format!(
            "solve_saddle: bracket [0, {:?}] does not contain the root for theta = {:?}",
            hi, theta
        )));
    }
    let tol = S::of(1e-15) * bound.max(S::one());
    let nu_abs = bisect(f, S::zero(), hi, tol)?;
    let nu = if theta > S::zero() { nu_abs } else { -nu_abs };

    Ok(SaddleSolution {
        theta,
        nu,
        gamma_at_saddle: gamma_imag(nu, c)?,
        gamma2_at_saddle: gamma2_imag(nu, c)?,
    })
}
