//! The rational bound family g_k(x) = k/((k−1)x + √(x²+k)) and the
//! enclosure g_π(x) ≤ V(x) < g₄(x).
//!
//! For every k > 0 the member g_k lies in (0, 1/x) and the family is
//! increasing in k. k = π gives the largest member that stays below V
//! (touching it at x = 0, where g_π(0) = V(0) = √π) and k = 4 the
//! smallest member that stays above — the enclosure is optimal within
//! the family. The classical Komatsu bracket, rendered in this
//! normalization, is [g₂(x), 2/(x + √(x²+1))] and strictly contains the
//! optimal one for x > 0 (the uppers coincide at x = 0).
//!
//! On the gap h_k = g_k − V: its right derivative at 0 is
//! g_k'(0) − V'(0) = −(k−1) − (−2) = 3 − k, as direct differentiation
//! shows and as the finite-difference checks in the test suite confirm
//! (the value 2 − k sometimes quoted for this slope does not match the
//! measured one; both are negative at k = π, so nothing downstream
//! depends on the difference).

use crate::error::{Error, Result};
use crate::eval::oracle_v;

/// Parameter of the lower enclosure bound (π, at full f64 precision —
/// the lower bound is tight exactly at k = π).
pub const LOWER_K: f64 = std::f64::consts::PI;
/// Parameter of the upper enclosure bound.
pub const UPPER_K: f64 = 4.0;
/// The Komatsu lower bound is the k = 2 family member.
pub const KOMATSU_LOWER_K: f64 = 2.0;

/// Gap h_k(x) = g_k(x) − V(x); the sign pattern of h_k decides whether
/// g_k is a valid one-sided bound.
#[derive(Clone, Copy, Debug)]
pub struct GapValue {
    pub k: f64,
    pub x: f64,
    pub h: f64,
}

/// Two-sided bracket for V(x).
#[derive(Clone, Copy, Debug)]
pub struct Enclosure {
    pub x: f64,
    pub lower: f64,
    pub upper: f64,
    pub width: f64,
}

impl Enclosure {
    fn new(x: f64, lower: f64, upper: f64) -> Self {
        debug_assert!(lower <= upper, "inverted enclosure at x={x}");
        Enclosure {
            x,
            lower,
            upper,
            width: upper - lower,
        }
    }
}

fn check_params(k: f64, x: f64) -> Result<()> {
    if !(k > 0.0) {
        return Err(Error::ParamDomain {
            k,
            range: "(0, ∞) required for g_k",
        });
    }
    if !(x >= 0.0) {
        return Err(Error::NegativeX { x });
    }
    Ok(())
}

/// g_k(x) = k/((k−1)x + √(x²+k)); g_k(0) = √k, and 0 < g_k(x) < 1/x
/// for x > 0.
pub fn g(k: f64, x: f64) -> Result<f64> {
    check_params(k, x)?;
    Ok(k / ((k - 1.0) * x + (x * x + k).sqrt()))
}

/// Analytic derivative g_k'(x) = −k[(k−1) + x/√(x²+k)] / [(k−1)x + √(x²+k)]²;
/// strictly negative, with g_k'(0) = −(k−1).
pub fn dg(k: f64, x: f64) -> Result<f64> {
    check_params(k, x)?;
    let root = (x * x + k).sqrt();
    let den = (k - 1.0) * x + root;
    Ok(-k * ((k - 1.0) + x / root) / (den * den))
}

/// Discriminant x²(k−2)(k−4) + k(k−3)² of the derivative inequality
/// g_k'(x) > 2[x·g_k(x) − 1]: for k > 3 the inequality holds exactly
/// where the discriminant is negative.
pub fn discriminant(k: f64, x: f64) -> f64 {
    x * x * (k - 2.0) * (k - 4.0) + k * (k - 3.0) * (k - 3.0)
}

/// Abscissa √(k(k−3)²/((k−2)(4−k))) where the discriminant changes sign
/// for 3 ≤ k < 4; beyond it g_k cannot remain an upper bound. Zero at
/// k = 3, diverging as k → 4⁻.
pub fn flip_threshold(k: f64) -> Result<f64> {
    if !(3.0..4.0).contains(&k) {
        return Err(Error::ParamDomain {
            k,
            range: "[3, 4) required for the flip threshold",
        });
    }
    Ok((k * (k - 3.0) * (k - 3.0) / ((k - 2.0) * (4.0 - k))).sqrt())
}

/// h_k(x) = g_k(x) − V(x), with V from the oracle at `oracle_tol`.
pub fn gap(k: f64, x: f64, oracle_tol: f64) -> Result<GapValue> {
    let gk = g(k, x)?;
    let v = oracle_v(x, oracle_tol)?;
    let h = gk - v.value;
    // Both terms lie in (0, 1/x), so |h| < 1/x.
    debug_assert!(x == 0.0 || h.abs() < 1.0 / x);
    Ok(GapValue { k, x, h })
}

/// The optimal enclosure [g_π(x), g₄(x)], audited against the oracle:
/// the bracket must contain V(x) to within `oracle_tol`, with
/// lower-side equality only at x = 0.
pub fn enclosure(x: f64, oracle_tol: f64) -> Result<Enclosure> {
    let lower = g(LOWER_K, x)?;
    let upper = g(UPPER_K, x)?;
    let v = oracle_v(x, oracle_tol)?;
    if lower > v.value + oracle_tol || v.value > upper + oracle_tol {
        return Err(Error::SelfCheck(format!(
            "enclosure [{lower}, {upper}] misses V({x}) = {}",
            v.value
        )));
    }
    Ok(Enclosure::new(x, lower, upper))
}

/// The classical Komatsu bracket in this normalization:
/// [2/(x + √(x²+2)), 2/(x + √(x²+1))]. Literature-sourced; call
/// [`validate_komatsu`] to audit the transcription against the oracle
/// before relying on it.
pub fn komatsu(x: f64) -> Result<Enclosure> {
    if !(x >= 0.0) {
        return Err(Error::NegativeX { x });
    }
    let lower = 2.0 / (x + (x * x + 2.0).sqrt());
    let upper = 2.0 / (x + (x * x + 1.0).sqrt());
    Ok(Enclosure::new(x, lower, upper))
}

/// Audits the Komatsu formulas against the oracle and against the
/// optimal enclosure on a fixed spot grid: the bracket must contain
/// V(x) and must contain [g_π, g₄] (strictly for x > 0 on the lower
/// side; the uppers coincide at x = 0). A wrong transcription of the
/// classical inequalities fails loudly here.
pub fn validate_komatsu() -> Result<()> {
    const SPOTS: [f64; 9] = [0.0, 0.25, 0.5, 1.0, 2.0, 5.0, 10.0, 30.0, 50.0];
    for &x in SPOTS.iter() {
        let kom = komatsu(x)?;
        let v = oracle_v(x, 1e-13)?.value;
        let lo = g(LOWER_K, x)?;
        let up = g(UPPER_K, x)?;
        let ok_bracket = kom.lower <= v && v <= kom.upper;
        let ok_nest_lower = kom.lower <= lo && (x == 0.0 || kom.lower < lo);
        let ok_nest_upper = up <= kom.upper;
        if !(ok_bracket && ok_nest_lower && ok_nest_upper) {
            return Err(Error::SelfCheck(format!(
                "komatsu audit failed at x={x}: [{}, {}] vs V={v}, g_pi={lo}, g_4={up}",
                kom.lower, kom.upper
            )));
        }
    }
    Ok(())
}
