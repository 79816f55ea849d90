//! Error type shared by all evaluation and verification routines.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The abscissa is outside the function's domain (x < 0).
    #[error("domain: x must be ≥ 0")]
    NegativeX { x: f64 },

    /// The abscissa is outside the accuracy domain of the requested engine.
    #[error("domain: x = {x} outside accuracy domain [{lo}, {hi}] of {engine}")]
    OutsideAccuracyDomain {
        x: f64,
        lo: f64,
        hi: f64,
        engine: &'static str,
    },

    /// A family or threshold parameter is outside its meaningful range.
    #[error("domain: parameter k = {k} outside {range}")]
    ParamDomain { k: f64, range: &'static str },

    /// The requested absolute error cannot be attained.
    #[error("precision: target absolute error {target:e} unattainable (best achieved {achieved:e})")]
    Precision { target: f64, achieved: f64 },

    /// An iterative engine failed to converge within its budget.
    #[error("{engine} did not converge within {budget} steps (last delta {last_delta:e})")]
    NonConvergence {
        engine: &'static str,
        budget: usize,
        last_delta: f64,
    },

    /// Adaptive step control shrank the step below the stiffness guard.
    #[error("ode: step size underflow near x = {x}")]
    StepUnderflow { x: f64 },

    /// A grid specification violates its invariants.
    #[error("grid: {0}")]
    Grid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
