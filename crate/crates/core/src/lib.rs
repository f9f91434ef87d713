//! Exact computation of triple and linear Hodge integrals from the
//! character-sum generating series, with the closed formulas and recursions
//! that the series implies.
//!
//! Everything is exact rational arithmetic; nothing is floating point.

pub mod bernoulli;
pub mod character;
pub mod cutjoin;
pub mod engine;
pub mod error;
pub mod exact;
pub mod identities;
pub mod partition;

pub use engine::{Engine, EngineConfig, HodgePolynomial, TauMode};
pub use error::{HodgeError, Result};
pub use exact::{Field, GaussianRational, Integer, LaurentSeries, PSeries, Rational, Ring, TauPolynomial};
pub use partition::Partition;
