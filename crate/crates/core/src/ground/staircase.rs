//! Staircase interfaces of the zero-temperature ground states.
//!
//! At tilt `theta` the infinite staircase advances one unit to the right per
//! column and climbs a geometric number of unit steps, so that any prescribed
//! placement of `n` vertical steps over `N` columns has probability
//! `p^n (1-p)^N` with `p = tan theta / (1 + tan theta)`.

use crate::error::{Error, Result};
use crate::mc::rng::{CounterRng, Stream};

/// Vertical-step probability `p(theta) = tan theta / (1 + tan theta)` on
/// `theta in [0, pi/4]`.
pub fn step_probability(theta: f64) -> Result<f64> {
    if !(0.0..=std::f64::consts::FRAC_PI_4 + 1e-15).contains(&theta) {
        return Err(Error::domain(format!(
            "step_probability: theta = {theta} outside [0, pi/4]; use reduce_angle first"
        )));
    }
    let t = theta.tan();
    Ok(t / (1.0 + t))
}

/// Reduce an angle in `[0, pi/2)` to the sampling range `[0, pi/4]`.
///
/// Returns `(theta', swapped)`; when `swapped` is true the caller must
/// transpose the sampled path (exchange horizontal and vertical roles) to
/// recover geometry at the original angle.
pub fn reduce_angle(theta: f64) -> Result<(f64, bool)> {
    if !(0.0..std::f64::consts::FRAC_PI_2).contains(&theta) {
        return Err(Error::domain(format!(
            "reduce_angle: theta = {theta} outside [0, pi/2)"
        )));
    }
    if theta <= std::f64::consts::FRAC_PI_4 {
        Ok((theta, false))
    } else {
        Ok((std::f64::consts::FRAC_PI_2 - theta, true))
    }
}

/// A sampled monotone staircase: per-column vertical increments.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StaircasePath {
    /// Vertical steps taken before each of the `N` horizontal advances.
    pub column_increments: Vec<u32>,
}

impl StaircasePath {
    /// Number of columns.
    pub fn columns(&self) -> usize {
        self.column_increments.len()
    }

    /// Total contour length `N + sum of increments`.
    pub fn length(&self) -> u64 {
        self.column_increments.len() as u64
            + self.column_increments.iter().map(|&g| g as u64).sum::<u64>()
    }

    /// Cumulative height after `s` columns.
    pub fn height_at(&self, s: usize) -> i64 {
        self.column_increments[..s].iter().map(|&g| g as i64).sum()
    }

    /// Heights at every column `0..=N`.
    pub fn heights(&self) -> Vec<i64> {
        let mut hs = Vec::with_capacity(self.column_increments.len() + 1);
        let mut h = 0i64;
        hs.push(h);
        for &g in &self.column_increments {
            h += g as i64;
            hs.push(h);
        }
        hs
    }

    /// Full vertex walk on the dual lattice from `(0, 0)`, climbing before
    /// each horizontal advance.
    pub fn vertices(&self) -> Vec<(i64, i64)> {
        let mut vs = Vec::with_capacity(self.length() as usize + 1);
        let (mut x, mut y) = (0i64, 0i64);
        vs.push((x, y));
        for &g in &self.column_increments {
            for _ in 0..g {
                y += 1;
                vs.push((x, y));
            }
            x += 1;
            vs.push((x, y));
        }
        vs
    }
}

/// Sample a staircase over `n` columns at tilt `theta in [0, pi/4]`.
///
/// Increments are i.i.d. Geometric(1-p), drawn by inverse CDF from the
/// 64-bit counter stream, so a `(seed, sample, column)` triple always yields
/// the same step on any platform or thread layout.
pub fn sample_staircase(theta: f64, n: usize, seed: u64) -> Result<StaircasePath> {
    sample_staircase_indexed(theta, n, seed, 0)
}

/// As [`sample_staircase`] with an extra index to draw many independent
/// paths from one seed.
pub fn sample_staircase_indexed(
    theta: f64,
    n: usize,
    seed: u64,
    sample: u64,
) -> Result<StaircasePath> {
    if n == 0 {
        return Err(Error::domain("sample_staircase: need n >= 1 columns"));
    }
    let p = step_probability(theta)?;
    let rng = CounterRng::new(seed);
    let ln_p = p.ln();
    let column_increments = (0..n)
        .map(|col| {
            if p == 0.0 {
                return 0;
            }
            let u = rng.uniform(Stream::Staircase, sample, col as u64);
            // Smallest g with u <= 1 - p^{g+1}.
            let g = ((1.0 - u).ln() / ln_p).ceil() - 1.0;
            g.max(0.0) as u32
        })
        .collect();
    Ok(StaircasePath { column_increments })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::{FRAC_PI_4, FRAC_PI_8};

    #[test]
    fn probability_endpoints() {
        assert_eq!(step_probability(0.0).unwrap(), 0.0);
        assert_abs_diff_eq!(step_probability(FRAC_PI_4).unwrap(), 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(step_probability(FRAC_PI_8).unwrap(), 0.292893, epsilon = 1e-6);
        assert!(step_probability(1.0).is_err());
        assert!(step_probability(-0.1).is_err());
    }

    #[test]
    fn angle_reduction_swaps_above_quarter_pi() {
        let (t, swapped) = reduce_angle(0.3).unwrap();
        assert_eq!((t, swapped), (0.3, false));
        let (t, swapped) = reduce_angle(1.2).unwrap();
        assert!(swapped);
        assert_abs_diff_eq!(t, std::f64::consts::FRAC_PI_2 - 1.2, epsilon = 1e-15);
    }

    #[test]
    fn flat_at_zero_tilt() {
        let p = sample_staircase(0.0, 64, 1).unwrap();
        assert!(p.column_increments.iter().all(|&g| g == 0));
        assert_eq!(p.length(), 64);
    }

    #[test]
    fn same_seed_same_path() {
        let a = sample_staircase(FRAC_PI_8, 256, 42).unwrap();
        let b = sample_staircase(FRAC_PI_8, 256, 42).unwrap();
        assert_eq!(a, b);
        let c = sample_staircase(FRAC_PI_8, 256, 43).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn empirical_mean_matches_geometric() {
        // mean = p/(1-p); 10^5 draws, 3 sigma band.
        let p = step_probability(FRAC_PI_8).unwrap();
        let n_samples = 1000u64;
        let cols = 100usize;
        let mut sum = 0.0f64;
        for s in 0..n_samples {
            let path = sample_staircase_indexed(FRAC_PI_8, cols, 7, s).unwrap();
            sum += path.column_increments.iter().map(|&g| g as f64).sum::<f64>();
        }
        let n_draws = (n_samples as usize * cols) as f64;
        let mean = sum / n_draws;
        let expect = p / (1.0 - p);
        let sigma = (p / ((1.0 - p) * (1.0 - p)) / n_draws).sqrt();
        assert!(
            (mean - expect).abs() < 3.0 * sigma,
            "mean {mean} vs {expect} +- {sigma}"
        );
    }

    #[test]
    fn geometric_law_chi_square() {
        // Distribution of a fixed column's increment over 10^5 samples.
        let p = step_probability(FRAC_PI_8).unwrap();
        let n_samples = 100_000u64;
        let kmax = 8usize;
        let mut counts = vec![0u64; kmax + 2];
        for s in 0..n_samples {
            let path = sample_staircase_indexed(FRAC_PI_8, 4, 11, s).unwrap();
            let g = path.column_increments[2] as usize;
            counts[g.min(kmax + 1)] += 1;
        }
        let mut expected: Vec<f64> = (0..=kmax)
            .map(|k| n_samples as f64 * p.powi(k as i32) * (1.0 - p))
            .collect();
        expected.push(n_samples as f64 * p.powi(kmax as i32 + 1)); // tail
        let pval = crate::numeric::stats::chi_square_pvalue(&counts, &expected, 5.0).unwrap();
        assert!(pval > 0.01, "chi-square p = {pval}");
    }

    #[test]
    fn vertex_walk_is_monotone_and_has_declared_length() {
        let path = sample_staircase(FRAC_PI_8, 64, 3).unwrap();
        let vs = path.vertices();
        assert_eq!(vs.len() as u64, path.length() + 1);
        assert_eq!(vs[0], (0, 0));
        for w in vs.windows(2) {
            let (dx, dy) = (w[1].0 - w[0].0, w[1].1 - w[0].1);
            assert!((dx, dy) == (1, 0) || (dx, dy) == (0, 1));
        }
        assert_eq!(vs.last().unwrap().0, 64);
    }
}
