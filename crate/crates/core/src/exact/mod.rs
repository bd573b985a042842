//! Closed-form interface theory of the half-plane Ising model: dual
//! couplings, the Onsager dispersion relation, the tilt saddle point, surface
//! tension and stiffness, and the limiting magnetization profile.
//!
//! Everything here is a pure function of value inputs and safe to call
//! concurrently.

mod couplings;
mod dispersion;
mod profile;
mod saddle;
mod tension;

pub use couplings::{dual_coupling, spontaneous_magnetization, Couplings};
pub use dispersion::{gamma, gamma2_imag, gamma_imag, nu_max};
pub use profile::{
    limiting_profile, log_partition_asymptotic, profile_f, profile_g, profile_points, z_scaling,
    z_scaling_forms, ProfilePoint, ZScalingForms,
};
pub use saddle::{solve_saddle, SaddleSolution};
pub use tension::{stiffness, surface_tension, tension_curve, TensionCurve, TensionRow};
