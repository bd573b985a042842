//! Monte Carlo engine (under construction).
pub mod rng;
