//! Small numerical toolbox: bracketed root finding, adaptive quadrature,
//! least-squares fits and sample statistics.

pub mod fit;
pub mod quad;
pub mod roots;
pub mod stats;

pub use fit::{exp_decay_fit, linear_fit, LinearFit};
pub use quad::integrate;
pub use roots::bisect;
