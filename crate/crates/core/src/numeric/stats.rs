//! Sample statistics: moments, jackknife, batch means, autocorrelation and a
//! chi-square goodness-of-fit helper.

use crate::error::{Error, Result};
use statrs::distribution::{ChiSquared, ContinuousCDF};

/// Sample mean.
pub fn mean(xs: &[f64]) -> f64 {
    xs.iter().sum::<f64>() / xs.len() as f64
}

/// Unbiased sample variance.
pub fn variance(xs: &[f64]) -> f64 {
    let n = xs.len();
    if n < 2 {
        return 0.0;
    }
    let m = mean(xs);
    xs.iter().map(|x| (x - m) * (x - m)).sum::<f64>() / (n - 1) as f64
}

/// Jackknife standard error of a statistic over leave-one-out resamples.
pub fn jackknife_stderr(xs: &[f64], stat: impl Fn(&[f64]) -> f64) -> f64 {
    let n = xs.len();
    if n < 2 {
        return 0.0;
    }
    let mut loo = Vec::with_capacity(n);
    let mut buf = Vec::with_capacity(n - 1);
    for i in 0..n {
        buf.clear();
        buf.extend(xs.iter().take(i).chain(xs.iter().skip(i + 1)));
        loo.push(stat(&buf));
    }
    let m = mean(&loo);
    let ss: f64 = loo.iter().map(|v| (v - m) * (v - m)).sum();
    ((n - 1) as f64 / n as f64 * ss).sqrt()
}

/// Mean and standard error estimated from `n_batches` contiguous batches.
///
/// The series is truncated to a multiple of the batch count; with correlated
/// Monte Carlo series the batch length should exceed the autocorrelation
/// time for the error to be trustworthy.
pub fn batch_means(xs: &[f64], n_batches: usize) -> Result<(f64, f64)> {
    if n_batches < 2 || xs.len() < n_batches {
        return Err(Error::Statistics(format!(
            "batch_means: {} samples into {} batches",
            xs.len(),
            n_batches
        )));
    }
    let blen = xs.len() / n_batches;
    let batches: Vec<f64> = (0..n_batches)
        .map(|b| mean(&xs[b * blen..(b + 1) * blen]))
        .collect();
    let m = mean(&batches);
    let v = variance(&batches);
    Ok((m, (v / n_batches as f64).sqrt()))
}

/// Integrated autocorrelation time with the standard self-consistent window
/// (sum until `t > 6 tau`). Returns 0.5 for an uncorrelated series.
pub fn integrated_autocorrelation(xs: &[f64]) -> f64 {
    let n = xs.len();
    if n < 8 {
        return 0.5;
    }
    let m = mean(xs);
    let c0: f64 = xs.iter().map(|x| (x - m) * (x - m)).sum::<f64>() / n as f64;
    if c0 == 0.0 {
        return 0.5;
    }
    let mut tau = 0.5;
    for t in 1..n / 2 {
        let ct: f64 = (0..n - t)
            .map(|i| (xs[i] - m) * (xs[i + t] - m))
            .sum::<f64>()
            / (n - t) as f64;
        let rho = ct / c0;
        if rho <= 0.0 {
            break;
        }
        tau += rho;
        if (t as f64) > 6.0 * tau {
            break;
        }
    }
    tau
}

/// Chi-square goodness-of-fit of observed counts against expected counts.
///
/// Bins with expected count below `min_expected` are pooled into a single
/// tail bin so the chi-square approximation stays valid. Returns the p-value.
pub fn chi_square_pvalue(observed: &[u64], expected: &[f64], min_expected: f64) -> Result<f64> {
    if observed.len() != expected.len() || observed.is_empty() {
        return Err(Error::Statistics("chi_square: length mismatch".into()));
    }
    let mut x2 = 0.0;
    let mut pooled_obs = 0.0;
    let mut pooled_exp = 0.0;
    let mut bins = 0usize;
    for (&o, &e) in observed.iter().zip(expected) {
        if e < min_expected {
            pooled_obs += o as f64;
            pooled_exp += e;
        } else {
            let d = o as f64 - e;
            x2 += d * d / e;
            bins += 1;
        }
    }
    if pooled_exp > 0.0 {
        let d = pooled_obs - pooled_exp;
        x2 += d * d / pooled_exp;
        bins += 1;
    }
    if bins < 2 {
        return Err(Error::Statistics("chi_square: fewer than 2 usable bins".into()));
    }
    let dof = (bins - 1) as f64;
    let dist = ChiSquared::new(dof).map_err(|e| Error::Statistics(e.to_string()))?;
    Ok(1.0 - dist.cdf(x2))
}
