//! Core library: exact analytics, simulation, and distributional test
//! machinery for a reversible Metropolis-Hastings chain on `[-1, 1]`
//! whose partial-sum variance grows like `2 n log n`.

pub mod chain;
pub mod error;
pub mod rng;
pub mod scalar;
pub mod stats;

pub use error::Error;
