//! Error function for real and complex arguments.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::ddouble::ComplexDD;
use crate::error::{Error, Result};

/// Largest |Im z| accepted by [`erf_complex`]; beyond it |erf z| grows like
/// e^{(Im z)²} and the Maclaurin sum can no longer hold full precision.
pub const COMPLEX_IM_GUARD: f64 = 6.0;

const SERIES_CUTOFF: f64 = 2.0;
const COMPLEX_CF_CUTOFF: f64 = 4.0;
const MAX_ITER: usize = 5000;

fn two_over_sqrt_pi() -> f64 {
    2.0 / PI.sqrt()
}

/// erf(x) = 2/√π e^{-x²} Σ 2ⁿ x^{2n+1} / (2n+1)!!; all terms positive.
fn erf_series(x: f64) -> f64 {
    let x2 = x * x;
    let mut term = x;
    let mut sum = x;
    for n in 1..MAX_ITER {
        term *= 2.0 * x2 / (2 * n + 1) as f64;
        sum += term;
        if term < sum * 1e-17 {
            break;
        }
    }
    two_over_sqrt_pi() * (-x2).exp() * sum
}

/// 1/(z + (1/2)/(z + 1/(z + (3/2)/(z + ...)))) by modified Lentz.
fn erfc_cf_kernel(z: Complex64) -> Complex64 {
    const TINY: f64 = 1e-300;
    let tiny = Complex64::new(TINY, 0.0);
    let mut f = z;
    if f.norm() == 0.0 {
        f = tiny;
    }
    let mut c = f;
    let mut d = Complex64::new(0.0, 0.0);
    for n in 1..MAX_ITER {
        let a = n as f64 / 2.0;
        d = z + d * a;
        if d.norm() == 0.0 {
            d = tiny;
        }
        c = z + a / c;
        if c.norm() == 0.0 {
            c = tiny;
        }
        d = d.inv();
        let delta = c * d;
        f *= delta;
        if (delta - 1.0).norm() < 1e-16 {
            break;
        }
    }
    f.inv()
}

/// erfc(x) for x >= `SERIES_CUTOFF` through the continued fraction.
fn erfc_cf(x: f64) -> f64 {
    (-x * x).exp() / PI.sqrt() * erfc_cf_kernel(Complex64::new(x, 0.0)).re
}

/// Real error function.
pub fn erf_real(x: f64) -> f64 {
    if x.is_nan() {
        return x;
    }
    let ax = x.abs();
    let v = if ax < SERIES_CUTOFF {
        erf_series(ax)
    } else if ax > 6.5 {
        1.0
    } else {
        1.0 - erfc_cf(ax)
    };
    v.copysign(x)
}

/// Complementary error function 1 - erf(x), without cancellation for large x.
pub fn erfc_real(x: f64) -> f64 {
    if x.is_nan() {
        return x;
    }
    if x >= SERIES_CUTOFF {
        if x > 27.3 {
            return 0.0;
        }
        erfc_cf(x)
    } else {
        1.0 - erf_real(x)
    }
}

/// Maclaurin sum (2/√π) Σ (-1)ⁿ z^{2n+1} / (n! (2n+1)) in double-double.
fn erf_maclaurin(z: Complex64) -> Complex64 {
    let zd = ComplexDD::new(z.re, z.im);
    let zz = zd.mul(zd);
    let neg_zz = ComplexDD { re: -zz.re, im: -zz.im };
    let mut term = zd;
    let mut sum = zd;
    let floor = z.norm_sqr();
    for n in 1..MAX_ITER {
        term = term.mul(neg_zz).div_f64(n as f64);
        let contrib = term.div_f64((2 * n + 1) as f64);
        sum = sum.add(contrib);
        if (n as f64) > floor && contrib.norm() < 1e-34 * sum.norm() {
            break;
        }
    }
    Complex64::new(sum.re.to_f64(), sum.im.to_f64()) * two_over_sqrt_pi()
}

/// Complex error function for |Im z| <= [`COMPLEX_IM_GUARD`].
pub fn erf_complex(z: Complex64) -> Result<Complex64> {
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::NonFinite(format!("erf argument {z}")));
    }
    if z.im.abs() > COMPLEX_IM_GUARD {
        return Err(Error::AccuracyGuard(format!("complex erf needs |Im z| <= {COMPLEX_IM_GUARD}, got {}", z.im)));
    }
    if z.re < 0.0 {
        return erf_complex(-z).map(|w| -w);
    }
    if z.re >= COMPLEX_CF_CUTOFF {
        let erfc = (-z * z).exp() / PI.sqrt() * erfc_cf_kernel(z);
        return Ok(Complex64::new(1.0, 0.0) - erfc);
    }
    Ok(erf_maclaurin(z))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jet::Jet;
    use crate::quad::{integrate, Bound, QuadConfig};
    use crate::specfun::hermite;
    use approx::assert_relative_eq;

    fn tight() -> QuadConfig {
        QuadConfig { rel_tol: 1e-13, abs_tol: 1e-300, max_evals: 400_000 }
    }

    fn gauss(t: f64) -> f64 {
        two_over_sqrt_pi() * (-t * t).exp()
    }

    /// erf(z) = (2/√π) z ∫_0^1 e^{-z² s²} ds, real and imaginary parts separately.
    fn complex_oracle(z: Complex64) -> Complex64 {
        let part = |re: bool| {
            integrate(
                move |s| {
                    let v = (-z * z * s * s).exp();
                    if re {
                        v.re
                    } else {
                        v.im
                    }
                },
                0.0.into(),
                1.0.into(),
                &tight(),
            )
            .unwrap()
            .value
        };
        z * Complex64::new(part(true), part(false)) * two_over_sqrt_pi()
    }

    #[test]
    fn real_examples() {
        assert_eq!(erf_real(0.0), 0.0);
        assert_relative_eq!(erf_real(1.0), 0.842_700_792_949_714_9, max_relative = 1e-15);
        assert_relative_eq!(erf_real(-0.5), -0.520_499_877_813_046_5, max_relative = 1e-15);
        assert_relative_eq!(erfc_real(3.0), 2.209_049_699_858_544e-5, max_relative = 1e-13);
        assert_relative_eq!(erfc_real(10.0), 2.088_487_583_762_545e-45, max_relative = 1e-13);
    }

    #[test]
    fn real_matches_quadrature() {
        for &x in &[0.1, 0.7, 1.5, 1.999, 2.0, 2.5, 3.5, 5.0] {
            let want = integrate(gauss, 0.0.into(), x.into(), &tight()).unwrap().value;
            assert_relative_eq!(erf_real(x), want, max_relative = 1e-13);
            let tail = integrate(gauss, x.into(), Bound::PosInf, &tight()).unwrap().value;
            assert_relative_eq!(erfc_real(x), tail, max_relative = 1e-12);
        }
    }

    #[test]
    fn imaginary_unit() {
        let v = erf_complex(Complex64::new(0.0, 1.0)).unwrap();
        assert!(v.re.abs() < 1e-15);
        assert!((v.im - 1.650425758797).abs() < 1e-11);
    }

    #[test]
    fn complex_matches_integral_representation() {
        let pts = [
            (0.3, 0.2),
            (1.0, 1.0),
            (2.5, -1.5),
            (0.5, 4.0),
            (3.9, 5.5),
            (4.0, 0.5),
            (5.5, 3.0),
            (-1.2, 2.2),
            (0.0, 6.0),
        ];
        for (re, im) in pts {
            let z = Complex64::new(re, im);
            let got = erf_complex(z).unwrap();
            let want = complex_oracle(z);
            assert!((got - want).norm() <= 1e-11 * want.norm(), "z = {z}: {got} vs {want}");
        }
    }

    #[test]
    fn complex_symmetries() {
        for (re, im) in [(0.7, 1.3), (4.5, 2.0), (2.0, -5.0)] {
            let z = Complex64::new(re, im);
            let w = erf_complex(z).unwrap();
            assert!((erf_complex(z.conj()).unwrap() - w.conj()).norm() <= 1e-14 * w.norm());
            assert!((erf_complex(-z).unwrap() + w).norm() <= 1e-14 * w.norm());
        }
        for x in [0.4, 3.0, 4.2] {
            let w = erf_complex(Complex64::new(x, 0.0)).unwrap();
            assert_relative_eq!(w.re, erf_real(x), max_relative = 1e-14);
        }
    }

    #[test]
    fn guard_rejects_large_imaginary_part() {
        let err = erf_complex(Complex64::new(0.5, 6.5)).unwrap_err();
        assert!(matches!(err, Error::AccuracyGuard(_)));
    }

    #[test]
    fn jet_derivatives_follow_hermite_chain() {
        // erf^{(n)}(x) = (2/√π) (-1)^{n-1} H_{n-1}(x) e^{-x²}
        for x in [0.3, 1.0, 2.0] {
            let e = Jet::var(x, 6).unwrap().erf().unwrap();
            for n in 1..=5u32 {
                let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
                let want = two_over_sqrt_pi() * sign * hermite(n - 1, x) * (-x * x).exp();
                assert_relative_eq!(e.deriv(n as usize), want, epsilon = 1e-12, max_relative = 1e-9);
            }
        }
    }
}
