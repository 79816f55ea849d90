//! Slow high-precision oracle: double-double exp-sinh quadrature of the
//! Laplace-type integral
//!
//! ```text
//! V(x) = ∫₀^∞ e^{-u} / sqrt(x² + u) du,       u = s²
//!      = ∫₀^∞ 2 s e^{-s²} / sqrt(x² + s²) ds
//! ```
//!
//! The substitution u = s² removes the integrable u^{-1/2} endpoint
//! singularity (at x = 0 the integrand is exactly 2e^{-s²}), so a single
//! rule serves every x ≥ 0. The exp-sinh map s = exp(π/2 · sinh t) turns
//! the semi-axis into a doubly-exponentially decaying integrand on the
//! line, where the trapezoid rule converges geometrically in 1/h; halving
//! h reuses all previous nodes, and |I_h - I_{h/2}| is a conservative
//! error estimate for I_{h/2}.
//!
//! Everything that depends only on the node — s², and the combined factor
//! (π/2)·cosh(t)·2 s² e^{-s²} — is tabulated once per level in
//! double-double precision, so a single evaluation costs one dd sqrt and
//! one dd division per node. The roundoff floor of the oracle is a few
//! units in 1e-31, far below every tolerance used by the test suites.

use std::sync::OnceLock;

use crate::dd::{Dd, PI_OVER_2};
use crate::error::{Error, Result};
use crate::eval::{Evaluation, Method};

/// Trapezoid levels: level ℓ uses step h = 2^-ℓ.
const LEVEL_MIN: u32 = 4;
const LEVEL_MAX: u32 = 9;

/// t-range of the exp-sinh rule, exact multiples of 2^-LEVEL_MIN so the
/// node sets nest between levels. Below T_LO the transformed weight is
/// under 1e-36 relative for every x; above T_HI the Gaussian factor
/// e^{-s²} is below 1e-37.
const T_LO: f64 = -4.75;
const T_HI: f64 = 1.5;

/// Smallest absolute error target the oracle accepts.
pub const MIN_TARGET: f64 = 1e-15;

/// One tabulated node: s² and the weight 2·(π/2)·cosh(t)·s²·e^{-s²}
/// (step factor h excluded; it is applied per level).
struct Node {
    s2: Dd,
    w: Dd,
}

/// Level tables. `base` holds every node of LEVEL_MIN; `incr[i]` holds the
/// odd-index nodes added when stepping to level LEVEL_MIN + 1 + i.
struct Tables {
    base: Vec<Node>,
    incr: Vec<Vec<Node>>,
}

fn node_at(t: f64) -> Node {
    let (sinh, cosh) = Dd::from_f64(t).sinh_cosh();
    let s = PI_OVER_2.mul(sinh).exp();
    let s2 = s.square();
    let w = PI_OVER_2.mul(cosh).mul(s2).mul(s2.neg().exp()).mul_pow2(2.0);
    Node { s2, w }
}

fn tables() -> &'static Tables {
    static TABLES: OnceLock<Tables> = OnceLock::new();
    TABLES.get_or_init(|| {
        let h0 = 0.5f64.powi(LEVEL_MIN as i32);
        let n0 = ((T_HI - T_LO) / h0).round() as i64;
        let base = (0..=n0).map(|j| node_at(T_LO + j as f64 * h0)).collect();
        let incr = (LEVEL_MIN + 1..=LEVEL_MAX)
            .map(|level| {
                let h = 0.5f64.powi(level as i32);
                let n = ((T_HI - T_LO) / h).round() as i64;
                (0..=n)
                    .filter(|j| j % 2 == 1)
                    .map(|j| node_at(T_LO + j as f64 * h))
                    .collect()
            })
            .collect();
        Tables { base, incr }
    })
}

/// Sum of w_j / sqrt(x² + s_j²) over one node block.
fn block_sum(nodes: &[Node], x2: Dd, acc: Dd) -> Dd {
    let mut sum = acc;
    for node in nodes {
        sum = sum.add(node.w.div(x2.add(node.s2).sqrt()));
    }
    sum
}

/// Evaluates V(x) by brute force to at most `target_abs_error`, doubling
/// the rule until two successive levels agree. Deterministic.
pub fn oracle_v(x: f64, target_abs_error: f64) -> Result<Evaluation> {
    if !(x >= 0.0) {
        return Err(Error::NegativeX { x });
    }
    if !(target_abs_error >= MIN_TARGET) {
        return Err(Error::Precision {
            target: target_abs_error,
            achieved: MIN_TARGET,
        });
    }

    let t = tables();
    let x2 = Dd::from_f64(x).square();

    let mut raw = block_sum(&t.base, x2, Dd::zero());
    let mut value = raw.mul_pow2(0.5f64.powi(LEVEL_MIN as i32));
    let mut err = f64::INFINITY;
    for (i, incr) in t.incr.iter().enumerate() {
        let level = LEVEL_MIN as i32 + 1 + i as i32;
        raw = block_sum(incr, x2, raw);
        let next = raw.mul_pow2(0.5f64.powi(level));
        err = next.sub(value).to_f64().abs();
        value = next;
        if err <= 0.25 * target_abs_error {
            break;
        }
    }
    // Roundoff floor of the dd summation.
    let floor = 1e-28 * value.hi.abs() + 1e-300;
    let err = err.max(floor);
    if err > target_abs_error {
        return Err(Error::Precision {
            target: target_abs_error,
            achieved: err,
        });
    }
    Ok(Evaluation::new(x, value.to_f64(), Method::Oracle, err))
}

/// V(x) as a double-double, for callers that need margins below f64
/// roundoff (the enclosure touch-point audit). Converges to the dd
/// roundoff floor.
pub(crate) fn oracle_v_dd(x: f64) -> Result<Dd> {
    if !(x >= 0.0) {
        return Err(Error::NegativeX { x });
    }
    let t = tables();
    let x2 = Dd::from_f64(x).square();
    let mut raw = block_sum(&t.base, x2, Dd::zero());
    let mut value = raw.mul_pow2(0.5f64.powi(LEVEL_MIN as i32));
    for (i, incr) in t.incr.iter().enumerate() {
        let level = LEVEL_MIN as i32 + 1 + i as i32;
        raw = block_sum(incr, x2, raw);
        let next = raw.mul_pow2(0.5f64.powi(level));
        let err = next.sub(value).to_f64().abs();
        value = next;
        if err <= 1e-25 * value.hi.abs() {
            break;
        }
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dd::SQRT_PI;

    // Reference values computed with mpmath at 60 significant digits:
    // V(x) = sqrt(pi) e^{x²} erfc(x), frozen as (hi, lo) f64 splits.
    const REFERENCE: &[(f64, f64, f64)] = &[
        (0.0, 1.772453850905516, -7.666586499825799e-17),
        (1e-6, 1.7724518509072884, 7.332652550318375e-17),
        (0.001, 1.7704556220269192, 9.763540723755887e-17),
        (0.1, 1.5889286263174076, -5.0037797677193435e-17),
        (0.25, 1.3654037050575751, -4.5781438512338015e-17),
        (0.5, 1.091282721530094, 1.0437618022561335e-16),
        (0.75, 0.8985235904310783, -1.6001652807675483e-17),
        (1.0, 0.7578721561413121, 1.3862056538182687e-17),
        (1.5, 0.5699953097895092, -3.0889901985068444e-17),
        (2.0, 0.4526770499811746, -4.674227993563962e-18),
        (3.0, 0.3172712797279751, -8.988457607134997e-18),
        (5.0, 0.19621886146307757, 1.2181676590042666e-17),
        (8.0, 0.12404547733901396, 6.394058123433181e-18),
        (10.0, 0.09950731878244698, -4.850056200879424e-18),
        (20.0, 0.049937732922831386, 2.055720794793709e-18),
        (30.0, 0.03331484559361022, -2.930762519189122e-18),
        (50.0, 0.019996002397603355, -1.3564157821163798e-18),
        (100.0, 0.009999500074981257, -4.62773336262949e-19),
    ];

    #[test]
    fn matches_reference_values_to_dd_accuracy() {
        for &(x, hi, lo) in REFERENCE {
            let got = oracle_v_dd(x).unwrap();
            let want = Dd::new(hi, lo);
            let rel = got.sub(want).to_f64().abs() / hi;
            assert!(rel < 1e-26, "x={x}: rel err {rel:e}");
        }
    }

    #[test]
    fn f64_oracle_meets_requested_tolerance() {
        for &(x, hi, lo) in REFERENCE {
            let want = Dd::new(hi, lo).to_f64();
            let ev = oracle_v(x, 1e-14).unwrap();
            assert!(
                (ev.value - want).abs() <= 1e-15 + 1e-15 * want,
                "x={x}: got {}, want {want}",
                ev.value
            );
            assert!(ev.abs_error_bound <= 1e-14);
        }
    }

    #[test]
    fn value_at_zero_is_sqrt_pi() {
        let ev = oracle_v(0.0, 1e-15).unwrap();
        assert!((ev.value - SQRT_PI.hi).abs() <= 1e-15);
        let dd = oracle_v_dd(0.0).unwrap();
        assert!(dd.sub(SQRT_PI).to_f64().abs() < 1e-28);
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(matches!(
            oracle_v(-1.0, 1e-12),
            Err(Error::NegativeX { .. })
        ));
        assert!(matches!(
            oracle_v(1.0, 1e-16),
            Err(Error::Precision { .. })
        ));
    }

    #[test]
    fn deterministic_across_calls() {
        let a = oracle_v(1.25, 1e-13).unwrap();
        let b = oracle_v(1.25, 1e-13).unwrap();
        assert_eq!(a.value.to_bits(), b.value.to_bits());
    }
}
