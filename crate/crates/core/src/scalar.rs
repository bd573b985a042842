//! Scalar abstraction for the closed-form layer.

use num_traits::{Float, FloatConst, FromPrimitive};

/// Floating-point scalar the exact-solution layer is generic over.
///
/// `f64` is the working type everywhere in this crate; `f32` satisfies the
/// bound as well and is exercised in tests, with correspondingly looser
/// tolerances.
pub trait Scalar: Float + FloatConst + FromPrimitive + core::fmt::Debug + Send + Sync + 'static {
    /// Lossless embedding of an `f64` constant (tolerances, grid steps).
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("constant representable in scalar type")
    }

    /// Round-trip into `f64` for reporting.
    fn to_f64(self) -> f64;
}

impl Scalar for f64 {
    fn to_f64(self) -> f64 {
        self
    }
}

impl Scalar for f32 {
    fn to_f64(self) -> f64 {
        self as f64
    }
}

/// Inverse hyperbolic cosine clamped against round-off just below 1.
///
/// The dispersion relation produces arguments like `cosh(a)cosh(b) -
/// sinh(a)sinh(b)cosh(nu)` that reach exactly 1 at a branch point; noise at
/// the last ulp must not turn into NaN.
pub fn acosh_clamped<S: Scalar>(x: S) -> Option<S> {
    let one = S::one();
    if x >= one {
        return Some(x.acosh());
    }
    let slack = S::of(512.0) * S::epsilon() * x.abs().max(one);
    if one - x <= slack {
        Some(S::zero())
    } else {
        None
    }
}
