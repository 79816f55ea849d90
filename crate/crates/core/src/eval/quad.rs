//! Fixed-rule f64 quadrature of the Laplace integral form.
//!
//! Same exp-sinh construction as the oracle (u = s² removes the endpoint
//! singularity; s = exp(π/2·sinh t) maps to the real line) but run
//! entirely in f64 with two fixed trapezoid levels; the coarse/fine
//! difference is the reported error bound. Node data depends only on the
//! rule, so it is tabulated once.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::eval::{Evaluation, Kahan, Method};

const T_LO: f64 = -4.75;
const T_HI: f64 = 1.5;
/// Coarse and fine steps: h = 2^-6 and 2^-7.
const LEVEL_COARSE: i32 = 6;
const LEVEL_FINE: i32 = 7;

/// (s², weight) pairs at the fine level; coarse nodes are the even
/// indices.
fn nodes() -> &'static Vec<(f64, f64)> {
    static NODES: OnceLock<Vec<(f64, f64)>> = OnceLock::new();
    NODES.get_or_init(|| {
        let h = 0.5f64.powi(LEVEL_FINE);
        let n = ((T_HI - T_LO) / h).round() as i64;
        (0..=n)
            .map(|j| {
                let t = T_LO + j as f64 * h;
                let s = (std::f64::consts::FRAC_PI_2 * t.sinh()).exp();
                let s2 = s * s;
                let w = 2.0 * std::f64::consts::FRAC_PI_2 * t.cosh() * s2 * (-s2).exp();
                (s2, w)
            })
            .collect()
    })
}

pub fn quad_v(x: f64) -> Result<Evaluation> {
    if !(x >= 0.0) {
        return Err(Error::NegativeX { x });
    }
    let x2 = x * x;
    let mut fine = Kahan::default();
    let mut coarse = Kahan::default();
    for (j, &(s2, w)) in nodes().iter().enumerate() {
        let term = w / (x2 + s2).sqrt();
        fine.add(term);
        if j % 2 == 0 {
            coarse.add(term);
        }
    }
    let h_fine = 0.5f64.powi(LEVEL_FINE);
    let h_coarse = 0.5f64.powi(LEVEL_COARSE);
    let value = h_fine * fine.value();
    let est = (h_coarse * coarse.value() - value).abs();
    let bound = est + 8.0 * f64::EPSILON * value.abs();
    Ok(Evaluation::new(x, value, Method::Quadrature, bound))
}
