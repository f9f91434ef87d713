//! Closed formulas, Mumford reduction and recursions, each evaluable on its
//! own and checkable against the engine.

pub mod closed_forms;
pub mod lambda_gm1;
pub mod mumford;
pub mod recursions;
pub mod report;
pub mod suites;

pub use closed_forms::{
    lambda1_lambdag, lambda_g_conjecture, lambda_g_linear, theorem32_integral, theorem32_rhs, LambdaGValue,
};
pub use lambda_gm1::{lambda_gm1_one_point, lambda_gm1_polynomials, lambda_gm1_recursion};
pub use mumford::{ch_to_lambda, mumford_reduce, LambdaMonomial, LambdaPolynomial, MumfordNormalForm};
pub use report::VerificationRecord;
pub use suites::{run_identity, SuiteRange, IDENTITIES};
