//! Bracketed scalar root finding.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Find the root of a continuous monotone-crossing `f` on `[lo, hi]` with
/// `f(lo)` and `f(hi)` of opposite sign.
///
/// A secant step seeds the search, after which plain bisection contracts the
/// bracket to `tol`; this never leaves the bracket, which matters close to
/// branch points where the functions here lose smoothness.
pub fn bisect<S: Scalar>(mut f: impl FnMut(S) -> S, lo: S, hi: S, tol: S) -> Result<S> {
    let (mut lo, mut hi) = (lo, hi);
    let mut flo = f(lo);
    let mut fhi = f(hi);
    if flo == S::zero() {
        return Ok(lo);
    }
    if fhi == S::zero() {
        return Ok(hi);
    }
    if (flo > S::zero()) == (fhi > S::zero()) {
        return Err(Error::numerical(format!(
            "bisect: no sign change on bracket [{:?}, {:?}] (f: {:?}, {:?})",
            lo, hi, flo, fhi
        )));
    }

    // Secant initialization: one interpolated point, kept only if it
    // tightens the bracket.
    let sec = lo - flo * (hi - lo) / (fhi - flo);
    if sec > lo && sec < hi {
        let fsec = f(sec);
        if fsec == S::zero() {
            return Ok(sec);
        }
        if (fsec > S::zero()) == (flo > S::zero()) {
            lo = sec;
            flo = fsec;
        } else {
            hi = sec;
            fhi = fsec;
        }
    }

    let max_iter = 200;
    for _ in 0..max_iter {
        if hi - lo <= tol {
            break;
        }
        let mid = lo + (hi - lo) / S::of(2.0);
        if mid <= lo || mid >= hi {
            break; // bracket at floating-point resolution
        }
        let fmid = f(mid);
        if fmid == S::zero() {
            return Ok(mid);
        }
        if (fmid > S::zero()) == (flo > S::zero()) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
            fhi = fmid;
        }
    }
    let _ = fhi;
    Ok(lo + (hi - lo) / S::of(2.0))
}
