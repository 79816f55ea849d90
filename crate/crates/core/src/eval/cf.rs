//! Continued fraction for the Gaussian tail form 2e^{x²}∫ₓ^∞ e^{-t²} dt.
//!
//! In this normalization the classical Laplace fraction for the Mills
//! ratio reads
//!
//! ```text
//! V(x) = 1/(x + (1/2)/(x + (2/2)/(x + (3/2)/(x + …))))
//! ```
//!
//! i.e. partial numerators aₙ = (n−1)/2 with a₁ = 1 and constant partial
//! denominators x. Evaluated with the modified Lentz algorithm; the last
//! iterate delta provides the error estimate. All partial quantities are
//! positive for x > 0, so the recurrence never cancels.

use crate::error::{Error, Result};
use crate::eval::{Evaluation, Method};

/// Lentz underflow guard.
const TINY: f64 = 1e-300;
/// Convergence threshold on |delta − 1|.
const EPS_STOP: f64 = 2.0 * f64::EPSILON;

pub fn cf_v(x: f64, max_depth: usize) -> Result<Evaluation> {
    if !(x >= 0.0) {
        return Err(Error::NegativeX { x });
    }
    if x < 1.0 {
        return Err(Error::OutsideAccuracyDomain {
            x,
            lo: 1.0,
            hi: f64::INFINITY,
            engine: "continued_fraction",
        });
    }
    if max_depth == 0 {
        return Err(Error::Grid("cf max_depth must be ≥ 1".into()));
    }

    let mut f = TINY;
    let mut c = TINY;
    let mut d = 0.0f64;
    let mut last_delta = f64::INFINITY;
    for n in 1..=max_depth {
        let a = if n == 1 { 1.0 } else { (n as f64 - 1.0) / 2.0 };
        d = x + a * d;
        if d.abs() < TINY {
            d = TINY;
        }
        c = x + a / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        let delta = c * d;
        f *= delta;
        last_delta = (delta - 1.0).abs();
        if last_delta < EPS_STOP {
            let bound = 8.0 * (last_delta + f64::EPSILON) * f.abs();
            return Ok(Evaluation::new(x, f, Method::ContinuedFraction, bound));
        }
    }
    Err(Error::NonConvergence {
        engine: "continued_fraction",
        budget: max_depth,
        last_delta,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eval::oracle_v;

    #[test]
    fn agrees_with_oracle() {
        for &x in &[1.0, 1.5, 2.0, 3.0, 5.0, 10.0, 30.0] {
            let cf = cf_v(x, 512).unwrap();
            let o = oracle_v(x, 1e-14).unwrap();
            assert!(
                (cf.value - o.value).abs() < 1e-13,
                "x={x}: cf {} vs oracle {}",
                cf.value,
                o.value
            );
        }
    }

    #[test]
    fn value_at_ten_matches_asymptotics() {
        let cf = cf_v(10.0, 64).unwrap();
        assert!((cf.value - 0.09950731878244698).abs() < 1e-14);
    }

    #[test]
    fn stays_in_bracket() {
        let mut x = 1.0;
        while x <= 1e6 {
            let cf = cf_v(x, 512).unwrap();
            assert!(cf.value > 0.0 && cf.value < 1.0 / x, "x={x}");
            x *= 3.7;
        }
    }

    #[test]
    fn reports_non_convergence_instead_of_truncating() {
        match cf_v(1.0, 4) {
            Err(Error::NonConvergence {
                budget, last_delta, ..
            }) => {
                assert_eq!(budget, 4);
                assert!(last_delta > 0.0);
            }
            other => panic!("expected NonConvergence, got {other:?}"),
        }
    }

    #[test]
    fn rejects_domain_violations() {
        assert!(cf_v(0.5, 64).is_err());
        assert!(cf_v(-2.0, 64).is_err());
        assert!(cf_v(2.0, 0).is_err());
    }
}
