//! Backward integration of V' = 2xV − 2.
//!
//! The homogeneous solutions of this equation grow like e^{x²}, so any
//! forward integration from x = 0 amplifies roundoff catastrophically
//! (the seed error is multiplied by e^{x²}). Integrating *backward* from
//! an asymptotic anchor reverses the amplification into damping: an
//! error injected at s > x is carried to x with factor e^{x²−s²} ≤ 1.
//! The integrator is a standard adaptive Dormand–Prince 5(4) pair.

use crate::error::{Error, Result};
use crate::eval::{asymptotic_v, Evaluation, Method, ASYMPTOTIC_MIN_X};

/// Default anchor abscissa; the asymptotic truncation error there is
/// ~1e-20, far below any step tolerance.
pub const DEFAULT_ODE_ANCHOR: f64 = 10.0;

/// Relative/absolute tolerance pair for the adaptive step controller.
#[derive(Clone, Copy, Debug)]
pub struct StepControl {
    pub rel: f64,
    pub abs: f64,
}

impl Default for StepControl {
    fn default() -> Self {
        StepControl {
            rel: 1e-12,
            abs: 1e-14,
        }
    }
}

fn rhs(x: f64, v: f64) -> f64 {
    2.0 * x * v - 2.0
}

/// One Dormand–Prince 5(4) step from (x, y) with signed step h.
/// Returns (y5, local error estimate).
fn dp54_step(x: f64, y: f64, h: f64) -> (f64, f64) {
    const A21: f64 = 1.0 / 5.0;
    const A31: f64 = 3.0 / 40.0;
    const A32: f64 = 9.0 / 40.0;
    const A41: f64 = 44.0 / 45.0;
    const A42: f64 = -56.0 / 15.0;
    const A43: f64 = 32.0 / 9.0;
    const A51: f64 = 19372.0 / 6561.0;
    const A52: f64 = -25360.0 / 2187.0;
    const A53: f64 = 64448.0 / 6561.0;
    const A54: f64 = -212.0 / 729.0;
    const A61: f64 = 9017.0 / 3168.0;
    const A62: f64 = -355.0 / 33.0;
    const A63: f64 = 46732.0 / 5247.0;
    const A64: f64 = 49.0 / 176.0;
    const A65: f64 = -5103.0 / 18656.0;
    const B1: f64 = 35.0 / 384.0;
    const B3: f64 = 500.0 / 1113.0;
    const B4: f64 = 125.0 / 192.0;
    const B5: f64 = -2187.0 / 6784.0;
    const B6: f64 = 11.0 / 84.0;
    // b − b* (difference to the embedded 4th-order weights).
    const E1: f64 = B1 - 5179.0 / 57600.0;
    const E3: f64 = B3 - 7571.0 / 16695.0;
    const E4: f64 = B4 - 393.0 / 640.0;
    const E5: f64 = B5 - -92097.0 / 339200.0;
    const E6: f64 = B6 - 187.0 / 2100.0;
    const E7: f64 = -1.0 / 40.0;

    let k1 = rhs(x, y);
    let k2 = rhs(x + h / 5.0, y + h * A21 * k1);
    let k3 = rhs(x + 3.0 * h / 10.0, y + h * (A31 * k1 + A32 * k2));
    let k4 = rhs(x + 4.0 * h / 5.0, y + h * (A41 * k1 + A42 * k2 + A43 * k3));
    let k5 = rhs(
        x + 8.0 * h / 9.0,
        y + h * (A51 * k1 + A52 * k2 + A53 * k3 + A54 * k4),
    );
    let k6 = rhs(
        x + h,
        y + h * (A61 * k1 + A62 * k2 + A63 * k3 + A64 * k4 + A65 * k5),
    );
    let y5 = y + h * (B1 * k1 + B3 * k3 + B4 * k4 + B5 * k5 + B6 * k6);
    let k7 = rhs(x + h, y5);
    let err = h * (E1 * k1 + E3 * k3 + E4 * k4 + E5 * k5 + E6 * k6 + E7 * k7);
    (y5, err.abs())
}

/// Adaptive integration of V' = 2xV − 2 from (x0, y0) to x1 (either
/// direction). Returns the terminal value and the accumulated local
/// error estimates.
pub(crate) fn integrate(x0: f64, y0: f64, x1: f64, ctrl: StepControl) -> Result<(f64, f64)> {
    let span = (x1 - x0).abs();
    if span == 0.0 {
        return Ok((y0, 0.0));
    }
    let dir = (x1 - x0).signum();
    let mut x = x0;
    let mut y = y0;
    let mut h = dir * span.min(0.01);
    let mut err_acc = 0.0f64;
    loop {
        if (x1 - x) * dir <= 0.0 {
            return Ok((y, err_acc));
        }
        if ((x1 - x) * dir) < h.abs() {
            h = x1 - x;
        }
        if h.abs() < 1e-13 * (1.0 + x.abs()) {
            return Err(Error::StepUnderflow { x });
        }
        let (y_new, err) = dp54_step(x, y, h);
        let tol = ctrl.abs + ctrl.rel * y_new.abs().max(y.abs());
        if err <= tol {
            x += h;
            y = y_new;
            err_acc += err;
            let factor = if err == 0.0 {
                5.0
            } else {
                (0.9 * (tol / err).powf(0.2)).clamp(0.2, 5.0)
            };
            h = (h * factor).clamp(-1.0, 1.0);
        } else {
            h *= (0.9 * (tol / err).powf(0.2)).max(0.1);
        }
    }
}

/// Evaluates V(x) by integrating the defining ODE backward from an
/// asymptotic anchor at `x_start` (default 10) down to x.
pub fn ode_v(x: f64, x_start: f64, step_control: StepControl) -> Result<Evaluation> {
    if !(x >= 0.0) {
        return Err(Error::NegativeX { x });
    }
    if !(x < x_start) {
        return Err(Error::OutsideAccuracyDomain {
            x,
            lo: 0.0,
            hi: x_start,
            engine: "ode",
        });
    }
    if x_start < ASYMPTOTIC_MIN_X {
        return Err(Error::OutsideAccuracyDomain {
            x: x_start,
            lo: ASYMPTOTIC_MIN_X,
            hi: f64::INFINITY,
            engine: "ode anchor",
        });
    }
    let anchor = asymptotic_v(x_start)?;
    let tol_scale = step_control.abs + step_control.rel * anchor.value;
    if anchor.abs_error_bound > tol_scale {
        return Err(Error::Precision {
            target: tol_scale,
            achieved: anchor.abs_error_bound,
        });
    }
    let (value, err_acc) = integrate(x_start, anchor.value, x, step_control)?;
    let bound = err_acc + anchor.abs_error_bound;
    Ok(Evaluation::new(x, value, Method::Ode, bound))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eval::{oracle_v, SQRT_PI};

    #[test]
    fn backward_run_lands_on_the_initial_condition() {
        let ev = ode_v(0.0, 10.0, StepControl::default()).unwrap();
        assert!(
            (ev.value - SQRT_PI).abs() < 1e-10,
            "V(0) via ode = {}",
            ev.value
        );
    }

    #[test]
    fn agrees_with_oracle_on_its_domain() {
        for i in 0..=18 {
            let x = i as f64 * 0.5;
            let ev = ode_v(x, 10.0, StepControl::default()).unwrap();
            let o = oracle_v(x, 1e-14).unwrap();
            assert!(
                (ev.value - o.value).abs() < 1e-9,
                "x={x}: ode {} vs oracle {}",
                ev.value,
                o.value
            );
        }
    }

    /// The unstable direction, run once to document why the engine
    /// integrates backward: seeding (0, √π) and integrating forward
    /// amplifies roundoff by e^{x²}, which has already destroyed three
    /// digits before x = 6.
    #[test]
    fn forward_integration_is_unstable() {
        let ctrl = StepControl::default();
        let (v6, _) = integrate(0.0, SQRT_PI, 6.0, ctrl).unwrap();
        let o = oracle_v(6.0, 1e-14).unwrap();
        assert!(
            (v6 - o.value).abs() > 1e-3,
            "forward run unexpectedly accurate: {} vs {}",
            v6,
            o.value
        );
    }

    #[test]
    fn rejects_bad_inputs() {
        let ctrl = StepControl::default();
        assert!(ode_v(-1.0, 10.0, ctrl).is_err());
        assert!(ode_v(10.0, 10.0, ctrl).is_err());
        assert!(ode_v(12.0, 10.0, ctrl).is_err());
        assert!(ode_v(1.0, 3.0, ctrl).is_err());
    }
}
