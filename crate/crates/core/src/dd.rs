//! Minimal double-double arithmetic (~31 decimal digits) used by the
//! high-precision oracle.
//!
//! A value is stored as an unevaluated sum `hi + lo` of two `f64`s with
//! `|lo| <= ulp(hi)/2`. The error-free transformations (`two_sum`,
//! `two_prod` with a Dekker split) and the add/mul/div/sqrt/exp algorithms
//! follow the classic QD library of Hida, Li and Bailey. Only the
//! operations the oracle needs are implemented; this is not a general
//! extended-precision library.
//!
//! No FMA is assumed: `two_prod` uses the Dekker split, so results are
//! bit-identical on every target with IEEE-754 `f64` arithmetic.

/// Double-double number: the unevaluated sum `hi + lo`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub(crate) struct Dd {
    pub hi: f64,
    pub lo: f64,
}

/// pi as a double-double.
pub(crate) const PI: Dd = Dd {
    hi: 3.141592653589793,
    lo: 1.2246467991473532e-16,
};

/// pi/2 as a double-double.
pub(crate) const PI_OVER_2: Dd = Dd {
    hi: 1.5707963267948966,
    lo: 6.123233995736766e-17,
};

/// ln(2) as a double-double.
const LN2: Dd = Dd {
    hi: 0.6931471805599453,
    lo: 2.3190468138462996e-17,
};

/// sqrt(pi) as a double-double.
pub(crate) const SQRT_PI: Dd = Dd {
    hi: 1.772453850905516,
    lo: -7.666586499825799e-17,
};

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

/// Requires |a| >= |b| (or a == 0).
#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let err = b - (s - a);
    (s, err)
}

/// Dekker split: a = hi + lo with hi holding the upper 26 bits.
#[inline]
fn split(a: f64) -> (f64, f64) {
    const SPLITTER: f64 = 134_217_729.0; // 2^27 + 1
    let t = SPLITTER * a;
    let hi = t - (t - a);
    let lo = a - hi;
    (hi, lo)
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let (ahi, alo) = split(a);
    let (bhi, blo) = split(b);
    let err = ((ahi * bhi - p) + ahi * blo + alo * bhi) + alo * blo;
    (p, err)
}

impl Dd {
    #[inline]
    pub fn new(hi: f64, lo: f64) -> Self {
        Dd { hi, lo }
    }

    #[inline]
    pub fn from_f64(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    #[inline]
    pub fn zero() -> Self {
        Dd { hi: 0.0, lo: 0.0 }
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn add(self, rhs: Dd) -> Dd {
        let (s1, s2) = two_sum(self.hi, rhs.hi);
        let (t1, t2) = two_sum(self.lo, rhs.lo);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        let (hi, lo) = quick_two_sum(s1, s2 + t2);
        Dd { hi, lo }
    }

    #[inline]
    pub fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }

    #[inline]
    pub fn sub(self, rhs: Dd) -> Dd {
        self.add(rhs.neg())
    }

    #[inline]
    pub fn mul(self, rhs: Dd) -> Dd {
        let (p1, p2) = two_prod(self.hi, rhs.hi);
        let p2 = p2 + self.hi * rhs.lo + self.lo * rhs.hi;
        let (hi, lo) = quick_two_sum(p1, p2);
        Dd { hi, lo }
    }

    #[inline]
    pub fn mul_f64(self, rhs: f64) -> Dd {
        let (p1, p2) = two_prod(self.hi, rhs);
        let (hi, lo) = quick_two_sum(p1, p2 + self.lo * rhs);
        Dd { hi, lo }
    }

    /// Exact scaling by a power of two.
    #[inline]
    pub fn mul_pow2(self, p: f64) -> Dd {
        Dd {
            hi: self.hi * p,
            lo: self.lo * p,
        }
    }

    pub fn div(self, rhs: Dd) -> Dd {
        let q1 = self.hi / rhs.hi;
        let r = self.sub(rhs.mul_f64(q1));
        let q2 = r.hi / rhs.hi;
        let r = r.sub(rhs.mul_f64(q2));
        let q3 = r.hi / rhs.hi;
        let (s, e) = quick_two_sum(q1, q2);
        Dd { hi: s, lo: e }.add(Dd::from_f64(q3))
    }

    /// Square root via one Newton correction of the f64 estimate; the
    /// f64 sqrt carries ~0.5 ulp so a single quadratic step reaches
    /// double-double accuracy. Requires self >= 0.
    pub fn sqrt(self) -> Dd {
        if self.hi == 0.0 && self.lo == 0.0 {
            return Dd::zero();
        }
        debug_assert!(self.hi > 0.0, "dd sqrt of negative value");
        let s = self.hi.sqrt();
        let (p1, p2) = two_prod(s, s);
        let d = self.sub(Dd::new(p1, p2));
        let corr = d.to_f64() / (2.0 * s);
        let (hi, lo) = quick_two_sum(s, corr);
        Dd { hi, lo }
    }

    pub fn square(self) -> Dd {
        self.mul(self)
    }

    /// exp via the standard reduction exp(a) = exp(r)^512 * 2^m with
    /// r = (a - m ln2)/512, Taylor-summed while terms still matter.
    pub fn exp(self) -> Dd {
        if self.hi <= -745.0 {
            return Dd::zero();
        }
        if self.hi >= 709.0 {
            return Dd::from_f64(f64::INFINITY);
        }
        let m = (self.hi / LN2.hi).round();
        let r = self.sub(LN2.mul_f64(m)).mul_pow2(1.0 / 512.0);

        // Taylor: 1 + r + r^2/2! + ...
        let mut sum = Dd::from_f64(1.0).add(r);
        let mut term = r;
        let mut n = 2.0;
        loop {
            term = term.mul(r).mul_f64(1.0 / n);
            sum = sum.add(term);
            if term.hi.abs() < 1e-40 {
                break;
            }
            n += 1.0;
            debug_assert!(n < 32.0, "dd exp Taylor failed to converge");
        }

        // exp(r)^512: nine squarings.
        for _ in 0..9 {
            sum = sum.square();
        }
        sum.mul_pow2(2f64.powi(m as i32))
    }

    /// sinh and cosh computed together from one exp; sinh falls back to
    /// its odd Taylor series for small arguments where e^t - e^{-t}
    /// cancels.
    pub fn sinh_cosh(self) -> (Dd, Dd) {
        let e = self.exp();
        let einv = Dd::from_f64(1.0).div(e);
        let cosh = e.add(einv).mul_pow2(0.5);
        let sinh = if self.hi.abs() >= 0.25 {
            e.sub(einv).mul_pow2(0.5)
        } else {
            // t + t^3/3! + t^5/5! + ...
            let t2 = self.square();
            let mut sum = self;
            let mut term = self;
            let mut n = 2.0;
            loop {
                term = term.mul(t2).mul_f64(1.0 / (n * (n + 1.0)));
                sum = sum.add(term);
                if term.hi.abs() < 1e-40 * sum.hi.abs() {
                    break;
                }
                n += 2.0;
                debug_assert!(n < 40.0, "dd sinh Taylor failed to converge");
            }
            sum
        };
        (sinh, cosh)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_dd_close(got: Dd, want_hi: f64, want_lo: f64, rel: f64) {
        let want = Dd::new(want_hi, want_lo);
        let diff = got.sub(want);
        let scale = want_hi.abs().max(f64::MIN_POSITIVE);
        assert!(
            diff.hi.abs() <= rel * scale,
            "dd mismatch: got ({:e}, {:e}), want ({:e}, {:e}), rel err {:e}",
            got.hi,
            got.lo,
            want_hi,
            want_lo,
            diff.hi.abs() / scale
        );
    }

    #[test]
    fn add_and_mul_are_exact_on_representable_cases() {
        let a = Dd::from_f64(1.0).add(Dd::from_f64(1e-20));
        assert_eq!(a.hi, 1.0);
        assert_eq!(a.lo, 1e-20);
        let b = a.sub(Dd::from_f64(1.0));
        assert_eq!(b.to_f64(), 1e-20);
        let p = Dd::from_f64(1.5).mul(Dd::from_f64(2.0));
        assert_eq!(p.hi, 3.0);
        assert_eq!(p.lo, 0.0);
    }

    // Reference splits computed with mpmath at 60 significant digits.
    #[test]
    fn exp_matches_reference_values() {
        let cases = [
            (0.0, 1.0, 0.0),
            (1.0, 2.718281828459045, 1.4456468917292502e-16),
            (-1.0, 0.36787944117144233, -1.2428753672788363e-17),
            (0.5, 1.6487212707001282, -4.731568479435833e-17),
            (-0.5, 0.6065306597126334, -6.593178415491414e-19),
            (3.0, 20.085536923187668, -1.8275625525512858e-16),
            (
                -1.2345678901234567,
                0.2909604620972043,
                -1.7555277454405197e-17,
            ),
            (-10.25, 3.535750085040998e-05, 1.323159849324113e-21),
            (-37.21875, 6.8564963896492e-17, 3.43372990856184e-33),
            (-85.0, 1.2160992992528256e-37, -1.060545727847004e-54),
            (0.001953125, 1.0019550335910028, 1.4880094000024225e-17),
            (-0.001953125, 0.9980487811074755, -5.173333050138318e-17),
            (2.1972245773362196, 9.000000000000002, -1.435233370999749e-16),
            (-48.41602037773958, 9.401334695969667e-22, 2.569471372708588e-38),
            (0.7071067811865476, 2.0281149816474726, -6.527217059575689e-17),
        ];
        for (x, hi, lo) in cases {
            assert_dd_close(Dd::from_f64(x).exp(), hi, lo, 1e-29);
        }
    }

    #[test]
    fn sqrt_matches_reference_values() {
        let cases = [
            (2.0, 1.4142135623730951, -9.667293313452913e-17),
            (3.0, 1.7320508075688772, 1.0035084221806903e-16),
            (0.5, 0.7071067811865476, -4.833646656726457e-17),
            (6.25, 2.5, 0.0),
            (
                1.2345678901234567e-05,
                0.003513641828820144,
                1.4120543793366507e-19,
            ),
            (12345.678901234567, 111.1111106111111, 5.02672108638818e-15),
            (1e300, 1e150, 4.5416783955164837e133),
        ];
        for (x, hi, lo) in cases {
            assert_dd_close(Dd::from_f64(x).sqrt(), hi, lo, 1e-30);
        }
        assert_eq!(Dd::zero().sqrt().to_f64(), 0.0);
    }

    #[test]
    fn sinh_cosh_consistency() {
        // cosh^2 - sinh^2 = 1, checked across both the exp and the
        // Taylor branch.
        for &t in &[0.001953125, 0.125, 0.25, 1.0, -2.5, 4.75, -4.75] {
            let (s, c) = Dd::from_f64(t).sinh_cosh();
            let one = c.square().sub(s.square());
            assert!(
                (one.to_f64() - 1.0).abs() < 1e-29,
                "cosh^2-sinh^2 at t={t}: {}",
                one.to_f64()
            );
        }
    }

    #[test]
    fn div_recovers_product() {
        let a = Dd::new(1.7724538509055161, -7.666586499825799e-17);
        let b = Dd::new(0.6065306597126334, -6.593178415491414e-19);
        let q = a.mul(b).div(b);
        assert_dd_close(q, a.hi, a.lo, 1e-30);
    }

    #[test]
    fn constants_are_consistent() {
        assert_dd_close(PI.mul_pow2(0.5), PI_OVER_2.hi, PI_OVER_2.lo, 1e-31);
        assert_dd_close(SQRT_PI.square(), PI.hi, PI.lo, 1e-30);
        assert_dd_close(PI.sqrt(), SQRT_PI.hi, SQRT_PI.lo, 1e-30);
    }
}
