//! The Onsager dispersion relation
//!
//! ```text
//! cosh gamma(w) = cosh 2K1* cosh 2K2 - sinh 2K1* sinh 2K2 cos w
//! ```
//!
//! on the real frequency axis and continued to `w = i nu`, where
//! `cos(i nu) = cosh nu`. On the imaginary axis the right-hand side
//! decreases with `|nu|` and crosses 1 at the branch point `nu_max`, beyond
//! which `gamma` leaves the real domain.

use crate::error::{Error, Result};
use crate::exact::Couplings;
use crate::numeric::bisect;
use crate::scalar::{acosh_clamped, Scalar};

/// The constants `A = cosh 2K1* cosh 2K2` and `B = sinh 2K1* sinh 2K2`
/// entering the dispersion relation as `cosh gamma = A - B cos w`.
pub(crate) fn dispersion_constants<S: Scalar>(c: &Couplings<S>) -> (S, S) {
    let two = S::of(2.0);
    let a1 = two * c.k1_dual();
    let a2 = two * c.k2();
    (a1.cosh() * a2.cosh(), a1.sinh() * a2.sinh())
}

/// `gamma(w)` for real `w`: nonnegative, even, 2*pi-periodic.
pub fn gamma<S: Scalar>(omega: S, c: &Couplings<S>) -> S {
    let (a, b) = dispersion_constants(c);
    let x = a - b * omega.cos();
    // For real w the argument never drops below cosh(2K2 - 2K1*) >= 1;
    // clamping guards the last ulp at w = 0 for critical couplings.
    acosh_clamped(x).unwrap_or_else(S::zero)
}

/// `gamma(i nu)` on the imaginary axis, defined while
/// `A - B cosh nu >= 1`; strictly decreasing in `|nu|`.
///
/// Past the branch point the error carries `nu_max` in its message.
pub fn gamma_imag<S: Scalar>(nu: S, c: &Couplings<S>) -> Result<S> {
    let (a, b) = dispersion_constants(c);
    let x = a - b * nu.cosh();
    acosh_clamped(x).ok_or_else(|| {
        let bound = nu_max(c).map(|v| v.to_f64()).unwrap_or(f64::NAN);
        Error::domain(format!(
            "gamma_imag: |nu| = {:?} beyond branch point nu_max = {:.12}",
            nu.abs(),
            bound
        ))
    })
}

/// Second derivative of `gamma` with respect to `w`, evaluated at `w = i nu`
/// (a real, positive quantity below the branch point).
///
/// Differentiating `cosh gamma = A - B cos w` twice and continuing:
///
/// ```text
/// gamma''(i nu) = B cosh nu / sinh gamma
///               + B^2 sinh^2 nu cosh gamma / sinh^3 gamma
/// ```
pub fn gamma2_imag<S: Scalar>(nu: S, c: &Couplings<S>) -> Result<S> {
    let (_, b) = dispersion_constants(c);
    let g = gamma_imag(nu, c)?;
    let sinh_g = g.sinh();
    if sinh_g <= S::zero() {
        return Err(Error::domain(
            "gamma2_imag: sinh gamma vanishes at the branch point".to_string(),
        ));
    }
    let cosh_g = g.cosh();
    let sh = nu.sinh();
    Ok(b * nu.cosh() / sinh_g + b * b * sh * sh * cosh_g / (sinh_g * sinh_g * sinh_g))
}

/// Branch point `nu_max`: the positive root of `A - B cosh nu = 1`, found by
/// bisection on a doubling bracket. Coincides with `2 |K1 - K2*|`.
pub fn nu_max<S: Scalar>(c: &Couplings<S>) -> Result<S> {
    c.require_subcritical()?;
    let (a, b) = dispersion_constants(c);
    let f = move |nu: S| a - b * nu.cosh() - S::one();
    let mut hi = S::one();
    while f(hi) > S::zero() {
        hi = hi * S::of(2.0);
        if hi > S::of(1e6) {
            return Err(Error::numerical("nu_max: bracket expansion failed".to_string()));
        }
    }
    let tol = S::of(1e-14).max(S::epsilon() * S::of(8.0)) * hi.max(S::one());
    bisect(f, S::zero(), hi, tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn c06() -> Couplings<f64> {
        Couplings::isotropic(0.6).unwrap()
    }

    #[test]
    fn gamma_at_zero_is_coupling_gap() {
        // cosh a cosh b - sinh a sinh b = cosh(a-b) => gamma(0) = 2(k2 - k1*)
        let c = c06();
        let expect = 2.0 * (c.k2() - c.k1_dual());
        assert_abs_diff_eq!(gamma(0.0, &c), expect, epsilon = 1e-13);

        let c = Couplings::new(0.5, 0.8).unwrap();
        let expect = 2.0 * (c.k2() - c.k1_dual());
        assert_abs_diff_eq!(gamma(0.0, &c), expect, epsilon = 1e-13);
    }

    #[test]
    fn gamma_at_pi_is_coupling_sum() {
        let c = c06();
        let expect = 2.0 * (c.k2() + c.k1_dual());
        assert_abs_diff_eq!(gamma(std::f64::consts::PI, &c), expect, epsilon = 1e-13);
    }

    #[test]
    fn gamma_is_even_and_periodic() {
        let c = Couplings::new(0.45, 0.9).unwrap();
        for i in 0..=20 {
            let w = -3.0 + 0.3 * i as f64;
            assert_abs_diff_eq!(gamma(w, &c), gamma(-w, &c), epsilon = 1e-13);
            assert_abs_diff_eq!(
                gamma(w, &c),
                gamma(w + 2.0 * std::f64::consts::PI, &c),
                epsilon = 1e-12
            );
        }
    }

    #[test]
    fn imaginary_axis_matches_real_axis_at_origin() {
        let c = c06();
        assert_abs_diff_eq!(gamma_imag(0.0, &c).unwrap(), gamma(0.0, &c), epsilon = 1e-14);
    }

    #[test]
    fn gamma_imag_decreases_to_zero_at_branch_point() {
        let c = c06();
        let nmax = nu_max(&c).unwrap();
        let mut prev = gamma_imag(0.0, &c).unwrap();
        for i in 1..10 {
            let nu = nmax * i as f64 / 10.0;
            let g = gamma_imag(nu, &c).unwrap();
            assert!(g < prev, "gamma(i nu) must decrease in nu");
            prev = g;
        }
        assert_abs_diff_eq!(gamma_imag(nmax, &c).unwrap(), 0.0, epsilon = 1e-5);
        assert!(gamma_imag(nmax + 0.05, &c).is_err());
    }

    #[test]
    fn branch_point_matches_dual_gap() {
        // nu_max = 2 |k1 - k2*| via the product identities of the duals.
        for (k1, k2) in [(0.6_f64, 0.6), (0.5, 0.8), (0.9, 0.7)] {
            let c = Couplings::new(k1, k2).unwrap();
            let expect = 2.0 * (c.k1() - c.k2_dual()).abs();
            assert_abs_diff_eq!(nu_max(&c).unwrap(), expect, epsilon = 1e-10);
        }
    }

    #[test]
    fn gamma2_matches_central_difference() {
        // d^2/dnu^2 gamma(i nu) = -gamma''(i nu); check at h = 1e-5.
        let c = Couplings::new(0.5_f64, 0.8).unwrap();
        let h = 1e-5;
        for nu in [0.0, 0.1, 0.3, 0.5] {
            let g2 = gamma2_imag(nu, &c).unwrap();
            let num = -(gamma_imag(nu + h, &c).unwrap() - 2.0 * gamma_imag(nu, &c).unwrap()
                + gamma_imag(nu - h, &c).unwrap())
                / (h * h);
            assert_abs_diff_eq!(g2, num, epsilon = 1e-5 * g2.abs().max(1.0));
        }
    }

    #[test]
    fn gamma2_positive_below_branch_point() {
        let c = c06();
        let nmax = nu_max(&c).unwrap();
        for i in 0..10 {
            let nu = nmax * i as f64 / 10.5;
            assert!(gamma2_imag(nu, &c).unwrap() > 0.0);
        }
    }
}
