//! Exact arithmetic: rationals, Gaussian rationals, τ-polynomials, truncated
//! Laurent series, power-sum series and exact interpolation.

pub mod gaussian;
pub mod interp;
pub mod laurent;
pub mod pseries;
pub mod rational;
pub mod ring;
pub mod tau;

pub use gaussian::GaussianRational;
pub use laurent::LaurentSeries;
pub use pseries::PSeries;
pub use rational::{Integer, Rational};
pub use ring::{Field, Ring};
pub use tau::TauPolynomial;
