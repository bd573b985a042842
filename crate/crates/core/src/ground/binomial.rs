//! Exact and asymptotic binomial partition functions.
//!
//! The number of staircases with `a` horizontal and `b` vertical steps is
//! `C(a+b, b)`. Logs are exact big-integer evaluations up to
//! `a + b <= 10^4` and log-gamma beyond; the switchover is validated in the
//! tests.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use statrs::function::gamma::ln_gamma;

use crate::error::{Error, Result};

/// Largest `a + b` evaluated through big integers.
pub const BIGINT_CUTOFF: u64 = 10_000;

/// Exact binomial coefficient `C(n, k)` as a big integer.
pub fn big_binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 1..=k {
        acc *= n - k + i;
        acc /= i;
    }
    acc
}

/// Natural log of a positive big integer, accurate to the last few ulps: the
/// top 64 bits carry the mantissa, the rest contributes through the exponent.
pub fn ln_biguint(x: &BigUint) -> Result<f64> {
    let bits = x.bits();
    if bits == 0 {
        return Err(Error::domain("ln_biguint: log of zero"));
    }
    if bits <= 53 {
        return Ok(x.to_f64().expect("small big integer fits f64").ln());
    }
    let shift = bits - 64;
    let head = (x >> shift).to_u64().expect("64-bit head") as f64;
    Ok(head.ln() + shift as f64 * std::f64::consts::LN_2)
}

/// `ln C(a+b, b)`: big-integer exact below the cutoff, log-gamma above.
pub fn binomial_log(a: u64, b: u64) -> f64 {
    let n = a + b;
    if n <= BIGINT_CUTOFF {
        ln_biguint(&big_binomial(n, b)).expect("binomial >= 1")
    } else {
        ln_gamma(n as f64 + 1.0) - ln_gamma(a as f64 + 1.0) - ln_gamma(b as f64 + 1.0)
    }
}

/// Cross-ratio of staircase counts with and without a window `(m, n)` carved
/// out near the origin, for endpoint heights `b` and `bbar`:
///
/// ```text
/// C(a+b-m-n, b-n)   C(a+bbar, bbar)
/// --------------- * ------------------- .
/// C(a+b, b)         C(a+bbar-m-n, bbar-n)
/// ```
///
/// Equal heights give exactly 1; for `b - bbar = o(N)` it tends to 1 as the
/// box grows, though not uniformly in `(m, n)`.
pub fn binomial_cross_ratio(a: u64, b: u64, bbar: u64, m: u64, n: u64) -> Result<f64> {
    if m > a || n > b || n > bbar {
        return Err(Error::domain(format!(
            "binomial_cross_ratio: window ({m}, {n}) too large for a={a}, b={b}, bbar={bbar}"
        )));
    }
    if b == bbar {
        return Ok(1.0);
    }
    let log_ratio = (binomial_log(a - m, b - n) - binomial_log(a, b))
        - (binomial_log(a - m, bbar - n) - binomial_log(a, bbar));
    Ok(log_ratio.exp())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    /// Independent oracle: ln C(a+b, b) as a plain sum of logs.
    fn log_binomial_by_log_sum(a: u64, b: u64) -> f64 {
        let n = a + b;
        let k = a.min(b);
        (1..=k)
            .map(|i| ((n - k + i) as f64).ln() - (i as f64).ln())
            .sum()
    }

    #[test]
    fn trivial_binomials() {
        assert_eq!(binomial_log(17, 0), 0.0);
        assert_abs_diff_eq!(binomial_log(2, 2), 6.0_f64.ln(), epsilon = 1e-14);
        assert_eq!(big_binomial(4, 2).to_u64().unwrap(), 6);
        assert_eq!(big_binomial(10, 3).to_u64().unwrap(), 120);
        assert_eq!(big_binomial(3, 7), BigUint::zero());
    }

    #[test]
    fn matches_log_sum_oracle() {
        for (a, b) in [(1300u64, 700u64), (2000, 700), (900, 900), (5000, 137)] {
            let expect = log_binomial_by_log_sum(a, b);
            let rel = ((binomial_log(a, b) - expect) / expect).abs();
            assert!(rel < 1e-10, "({a},{b}): rel = {rel:.3e}");
        }
    }

    #[test]
    fn switchover_is_seamless() {
        // Same pair evaluated through both routes at the cutoff boundary.
        for (a, b) in [(BIGINT_CUTOFF - 3000, 3000u64), (BIGINT_CUTOFF / 2, BIGINT_CUTOFF / 2)] {
            let exact = ln_biguint(&big_binomial(a + b, b)).unwrap();
            let gamma = ln_gamma((a + b) as f64 + 1.0)
                - ln_gamma(a as f64 + 1.0)
                - ln_gamma(b as f64 + 1.0);
            let rel = ((exact - gamma) / exact).abs();
            assert!(rel < 1e-12, "switchover rel = {rel:.3e}");
        }
    }

    #[test]
    fn ln_biguint_handles_huge_values() {
        let x = BigUint::from(3u32).pow(5000);
        let expect = 5000.0 * 3.0_f64.ln();
        assert_abs_diff_eq!(ln_biguint(&x).unwrap(), expect, epsilon = 1e-9);
    }

    #[test]
    fn cross_ratio_is_one_for_equal_heights() {
        assert_eq!(binomial_cross_ratio(100, 40, 40, 3, 2).unwrap(), 1.0);
    }

    #[test]
    fn cross_ratio_converges_with_sqrt_excess() {
        // b = bbar + floor(sqrt N) at theta = pi/4: |ratio - 1| shrinks in N.
        let mut prev = f64::INFINITY;
        for n in [100u64, 400, 1600, 6400] {
            let bbar = n;
            let b = bbar + (n as f64).sqrt().floor() as u64;
            let r = binomial_cross_ratio(n, b, bbar, 3, 2).unwrap();
            let dev = (r - 1.0).abs();
            assert!(dev < prev, "N={n}: {dev} !< {prev}");
            prev = dev;
        }
        assert!(prev < 0.01);
    }

    #[test]
    fn cross_ratio_departs_for_growing_window() {
        // Fixed N, growing m: not uniform in the window size.
        let n = 400u64;
        let bbar = n;
        let b = bbar + 20;
        let mut prev = 0.0;
        for m in [2u64, 20, 80, 200] {
            let dev = (binomial_cross_ratio(n, b, bbar, m, 2).unwrap() - 1.0).abs();
            assert!(dev > prev, "m={m}");
            prev = dev;
        }
        assert!(prev > 0.05);
    }

    #[test]
    fn cross_ratio_rejects_inadmissible() {
        assert!(binomial_cross_ratio(5, 40, 40, 6, 2).is_err());
        assert!(binomial_cross_ratio(50, 1, 40, 3, 2).is_err());
    }
}
