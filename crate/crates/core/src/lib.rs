//! Interfaces of the two-dimensional Ising ferromagnet on a half-plane strip
//! with Dobrushin boundary conditions.
//!
//! The crate has four largely independent layers:
//!
//! * [`exact`] — closed-form interface theory: Kramers–Wannier duals, the
//!   Onsager dispersion relation on the real and imaginary frequency axes,
//!   the tilt saddle point, surface tension and stiffness, and the limiting
//!   error-function magnetization profile. Generic over the scalar type.
//! * [`ground`] — the zero-temperature picture: staircase interface sampling,
//!   exact big-integer binomial partition functions, cross-ratio convergence
//!   and minimal-length endpoint pairings.
//! * [`mc`] — a finite-temperature Metropolis simulator for the strip with a
//!   `+/-` split left edge and a tilted right edge, driven by a counter-based
//!   PRNG so results are independent of thread count.
//! * [`contour`] — Peierls contour extraction from spin configurations and
//!   the geometric observables built on it (cigar containment, width
//!   statistics, wall avoidance, length tails).

pub mod contour;
pub mod error;
pub mod exact;
pub mod ground;
pub mod mc;
pub mod numeric;
pub mod scalar;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// Default scalar used by the concrete aliases below and by the simulation
/// layer (which is not generic).
pub type Real = f64;

/// `f64` couplings, the common case.
pub type Couplings = exact::Couplings<Real>;
/// `f64` saddle solution.
pub type SaddleSolution = exact::SaddleSolution<Real>;
/// `f64` tension/stiffness table.
pub type TensionCurve = exact::TensionCurve<Real>;
/// `f64` profile point.
pub type ProfilePoint = exact::ProfilePoint<Real>;
