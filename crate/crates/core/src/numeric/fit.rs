//! Least-squares fits used by the asymptotic checks.

use crate::error::{Error, Result};

/// Result of an ordinary least-squares line fit `y = slope * x + intercept`.
#[derive(Debug, Clone, Copy)]
pub struct LinearFit {
    pub slope: f64,
    pub intercept: f64,
    /// Coefficient of determination.
    pub r_squared: f64,
    /// Largest absolute residual.
    pub max_residual: f64,
}

/// Ordinary least squares for `y = a x + b`.
pub fn linear_fit(xs: &[f64], ys: &[f64]) -> Result<LinearFit> {
    if xs.len() != ys.len() || xs.len() < 2 {
        return Err(Error::numerical("linear_fit: need >= 2 paired points"));
    }
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    if sxx == 0.0 {
        return Err(Error::numerical("linear_fit: degenerate abscissae"));
    }
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let syy: f64 = ys.iter().map(|y| (y - my) * (y - my)).sum();
    let mut ss_res = 0.0;
    let mut max_residual: f64 = 0.0;
    for (x, y) in xs.iter().zip(ys) {
        let r = y - (slope * x + intercept);
        ss_res += r * r;
        max_residual = max_residual.max(r.abs());
    }
    let r_squared = if syy > 0.0 { 1.0 - ss_res / syy } else { 1.0 };
    Ok(LinearFit {
        slope,
        intercept,
        r_squared,
        max_residual,
    })
}

/// Fit `p = c * exp(-rate * x)` on the points with `p > 0` by a line fit in
/// log space; returns the decay rate.
pub fn exp_decay_fit(xs: &[f64], ps: &[f64]) -> Result<f64> {
    let pts: Vec<(f64, f64)> = xs
        .iter()
        .zip(ps)
        .filter(|(_, p)| **p > 0.0)
        .map(|(x, p)| (*x, p.ln()))
        .collect();
    if pts.len() < 2 {
        return Err(Error::numerical("exp_decay_fit: fewer than 2 positive points"));
    }
    let (xs, ys): (Vec<f64>, Vec<f64>) = pts.into_iter().unzip();
    Ok(-linear_fit(&xs, &ys)?.slope)
}
