//! Large-x asymptotic expansion
//!
//! ```text
//! V(x) ~ 1/x − 1/(2x³) + 3/(4x⁵) − 15/(8x⁷) + …,
//! ```
//!
//! term ratio −(2m−1)/(2x²). The series is the Watson expansion of a
//! Stieltjes transform, so consecutive partial sums straddle the true
//! value and the first omitted term bounds the truncation error.
//! Truncation stops at the smallest term (or at f64 noise level).

use crate::error::{Error, Result};
use crate::eval::{Evaluation, Method};

/// Smallest abscissa at which the expansion is offered; at x = 4 the
/// smallest term is ≈ 4e-8 and shrinks rapidly beyond.
pub const ASYMPTOTIC_MIN_X: f64 = 4.0;

pub fn asymptotic_v(x: f64) -> Result<Evaluation> {
    if !(x >= 0.0) {
        return Err(Error::NegativeX { x });
    }
    if x < ASYMPTOTIC_MIN_X {
        return Err(Error::OutsideAccuracyDomain {
            x,
            lo: ASYMPTOTIC_MIN_X,
            hi: f64::INFINITY,
            engine: "asymptotic",
        });
    }

    let inv_x2 = 1.0 / (x * x);
    let mut term = 1.0 / x;
    let mut sum = term;
    let mut m = 1u32;
    loop {
        let next = -term * (2.0 * m as f64 - 1.0) * 0.5 * inv_x2;
        if next.abs() >= term.abs() {
            // Divergence point reached; `term` is already the smallest.
            return Ok(Evaluation::new(x, sum, Method::Asymptotic, term.abs()));
        }
        if next.abs() < f64::EPSILON * sum.abs() {
            return Ok(Evaluation::new(x, sum, Method::Asymptotic, next.abs()));
        }
        sum += next;
        term = next;
        m += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eval::oracle_v;

    #[test]
    fn four_term_value_at_ten() {
        // 1/10 − 1/2000 + 3/400000 − 15/(8e7) = 0.0995073125; the full
        // truncation continues to V(10) = 0.09950731878244698.
        let ev = asymptotic_v(10.0).unwrap();
        assert!((ev.value - 0.09950731878244698).abs() < 1e-15);
        assert!((0.0995073125f64 - ev.value).abs() < 1e-8);
    }

    #[test]
    fn error_bound_holds_against_oracle() {
        for &x in &[4.0, 5.0, 6.0, 8.0, 10.0, 20.0, 50.0] {
            let a = asymptotic_v(x).unwrap();
            let o = oracle_v(x, 1e-14).unwrap();
            assert!(
                (a.value - o.value).abs() <= a.abs_error_bound + 1e-14,
                "x={x}: err {:e} > bound {:e}",
                (a.value - o.value).abs(),
                a.abs_error_bound
            );
        }
    }

    #[test]
    fn rejects_small_x() {
        assert!(asymptotic_v(3.9).is_err());
        assert!(asymptotic_v(-1.0).is_err());
    }
}
