//! Zero-temperature interface theory.
pub mod binomial;
pub mod oz;
pub mod pairing;
pub mod staircase;
