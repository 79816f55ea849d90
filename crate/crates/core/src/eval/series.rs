//! Maclaurin series of V around 0.
//!
//! Matching powers in V' = 2xV − 2 with V(0) = √π forces
//! c₀ = √π, c₁ = −2 and c_{n+1} = 2c_{n−1}/(n+1); the even coefficients
//! are √π/m! and the odd ones negative, so the series is summed as two
//! all-positive partial sums (even and odd) and subtracted once, which
//! keeps cancellation to a single rounding.

use crate::error::{Error, Result};
use crate::eval::{Evaluation, Kahan, Method, SQRT_PI};

/// Largest abscissa at which the series route is offered.
pub const SERIES_MAX_X: f64 = 1.5;

/// Configured maximum number of series terms.
pub const MAX_TERMS: usize = 256;

/// Maclaurin coefficients of V and their count.
#[derive(Clone, Debug)]
pub struct SeriesState {
    coefficients: Vec<f64>,
    n_terms: usize,
}

impl SeriesState {
    /// Computes c₀ … c_{n_terms} (one extra coefficient so the first
    /// omitted term is available for the error estimate).
    pub fn new(n_terms: usize) -> Self {
        assert!(n_terms >= 1 && n_terms <= MAX_TERMS);
        let mut c = Vec::with_capacity(n_terms + 1);
        c.push(SQRT_PI);
        c.push(-2.0);
        for n in 1..n_terms {
            let next = 2.0 * c[n - 1] / (n as f64 + 1.0);
            c.push(next);
        }
        SeriesState {
            coefficients: c,
            n_terms,
        }
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.coefficients
    }

    pub fn n_terms(&self) -> usize {
        self.n_terms
    }
}

/// Evaluates the series Σ_{n < n_terms} c_n xⁿ.
pub fn series_v(x: f64, n_terms: usize) -> Result<Evaluation> {
    if !(x >= 0.0) {
        return Err(Error::NegativeX { x });
    }
    if x > SERIES_MAX_X {
        return Err(Error::OutsideAccuracyDomain {
            x,
            lo: 0.0,
            hi: SERIES_MAX_X,
            engine: "series",
        });
    }
    if n_terms == 0 || n_terms > MAX_TERMS {
        return Err(Error::Grid(format!(
            "series n_terms = {n_terms} outside 1..={MAX_TERMS}"
        )));
    }

    let state = SeriesState::new(n_terms);
    let mut even = Kahan::default();
    let mut odd = Kahan::default();
    let mut pow = 1.0;
    for (n, &c) in state.coefficients[..n_terms].iter().enumerate() {
        let term = c * pow;
        if n % 2 == 0 {
            even.add(term);
        } else {
            odd.add(-term);
        }
        pow *= x;
    }
    let value = even.value() - odd.value();
    let omitted = (state.coefficients[n_terms] * pow).abs();
    let rounding = 4.0 * f64::EPSILON * (even.value() + odd.value());
    Ok(Evaluation::new(
        x,
        value,
        Method::Series,
        omitted + rounding,
    ))
}
