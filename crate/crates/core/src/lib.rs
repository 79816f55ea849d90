//! Evaluation and certified two-sided bounds for the scaled complementary
//! error function
//!
//! ```text
//! V(x) = √π e^{x²} (1 − erf x) = ∫₀^∞ e^{-u}/√(x²+u) du,   x ≥ 0,
//! ```
//!
//! together with the rational bound family
//!
//! ```text
//! g_k(x) = k / ((k−1)x + √(x²+k)),
//! ```
//!
//! whose members satisfy g_π(x) ≤ V(x) < g₄(x) with equality only at
//! g_π(0) = V(0) = √π — the optimal two-sided enclosure within the
//! family. The [`verify`] module sweeps and searches these claims
//! numerically against a slow high-precision oracle.

mod dd;
pub mod bounds;
pub mod error;
pub mod eval;
pub mod verify;

pub use bounds::{Enclosure, GapValue};
pub use error::{Error, Result};
pub use eval::{eval_v, Evaluation, Method, SQRT_PI};
pub use verify::{Counterexample, Grid, GridSpec, Spacing, VerificationReport};
