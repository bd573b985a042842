//! Adaptive Simpson quadrature.

use crate::scalar::Scalar;

fn simpson<S: Scalar>(fa: S, fm: S, fb: S, h: S) -> S {
    h / S::of(6.0) * (fa + S::of(4.0) * fm + fb)
}

fn adapt<S: Scalar>(
    f: &impl Fn(S) -> S,
    a: S,
    b: S,
    fa: S,
    fm: S,
    fb: S,
    whole: S,
    tol: S,
    depth: u32,
) -> S {
    let m = a + (b - a) / S::of(2.0);
    let lm = a + (m - a) / S::of(2.0);
    let rm = m + (b - m) / S::of(2.0);
    let flm = f(lm);
    let frm = f(rm);
    let left = simpson(fa, flm, fm, m - a);
    let right = simpson(fm, frm, fb, b - m);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= S::of(15.0) * tol {
        return left + right + delta / S::of(15.0);
    }
    let half_tol = tol / S::of(2.0);
    adapt(f, a, m, fa, flm, fm, left, half_tol, depth - 1)
        + adapt(f, m, b, fm, frm, fb, right, half_tol, depth - 1)
}

/// Integrate `f` over `[a, b]` to absolute tolerance `tol`.
pub fn integrate<S: Scalar>(f: impl Fn(S) -> S, a: S, b: S, tol: S) -> S {
    if a == b {
        return S::zero();
    }
    let m = a + (b - a) / S::of(2.0);
    let (fa, fm, fb) = (f(a), f(m), f(b));
    let whole = simpson(fa, fm, fb, b - a);
    adapt(&f, a, b, fa, fm, fb, whole, tol, 40)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_is_exact() {
        let v = integrate(|x: f64| 3.0 * x * x, 0.0, 2.0, 1e-12);
        assert!((v - 8.0).abs() < 1e-12);
    }

    #[test]
    fn gaussian_half_mass() {
        // int_0^inf e^{-x^2} = sqrt(pi)/2; [0, 10] captures it to ~1e-44.
        let v = integrate(|x: f64| (-x * x).exp(), 0.0, 10.0, 1e-13);
        assert!((v - std::f64::consts::PI.sqrt() / 2.0).abs() < 1e-12);
    }
}
