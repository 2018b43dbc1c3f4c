//! Ready-made [`FuncRep`]s for the kernels that appear in the identity
//! registry. Each one produces exact jets, so the operators can
//! differentiate them to any supported order.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::jet::Jet;
use crate::operators::{FuncRep, Interval};
use crate::specfun::{lower_inc_gamma, polygamma as psi, sph_bessel_jet, upper_inc_gamma};

pub fn exp() -> FuncRep {
    FuncRep::from_expr(Interval::REAL, |x| x.exp())
}

/// `e^{-t}`.
pub fn exp_neg() -> FuncRep {
    FuncRep::from_expr(Interval::REAL, |x| x.scale(-1.0).exp())
}

pub fn sin() -> FuncRep {
    FuncRep::from_expr(Interval::REAL, |x| x.sin())
}

pub fn cos() -> FuncRep {
    FuncRep::from_expr(Interval::REAL, |x| x.cos())
}

/// `c e^{-t²}`.
pub fn gaussian(c: f64) -> FuncRep {
    FuncRep::from_expr(Interval::REAL, move |x| Ok((x * x).scale(-1.0).exp()?.scale(c)))
}

/// `Σ c_i tⁱ` by Horner's rule in jet arithmetic.
pub fn polynomial(coeffs: Vec<f64>) -> FuncRep {
    FuncRep::from_expr(Interval::REAL, move |x| {
        let mut acc = Jet::constant(x.center(), 0.0, x.order())?;
        for c in coeffs.iter().rev() {
            acc = (&acc * x).add_scalar(*c);
        }
        Ok(acc)
    })
}

/// `t^p`; on the whole line for non-negative integer `p`, else on `t > 0`.
pub fn power(p: f64) -> FuncRep {
    if p >= 0.0 && p.fract() == 0.0 {
        FuncRep::from_expr(Interval::REAL, move |x| x.powi(p as i32))
    } else {
        FuncRep::from_expr(Interval::POSITIVE, move |x| x.powf(p))
    }
}

/// `(t² - 1)^k`, the Rodrigues kernel of the Legendre polynomials.
pub fn legendre_kernel(k: u32) -> FuncRep {
    FuncRep::from_expr(Interval::REAL, move |x| (x * x).add_scalar(-1.0).powi(k as i32))
}

/// `t^k e^{-t}`, the Rodrigues kernel of the Laguerre polynomials.
pub fn laguerre_kernel(k: u32) -> FuncRep {
    FuncRep::from_expr(Interval::REAL, move |x| x.powi(k as i32)?.try_mul(&x.scale(-1.0).exp()?))
}

pub fn erf() -> FuncRep {
    FuncRep::from_expr(Interval::REAL, |x| x.erf())
}

/// Lower incomplete gamma `γ(a, x)` on `x > 0`: the value from
/// [`lower_inc_gamma`], higher coefficients from `γ' = x^{a-1} e^{-x}`.
pub fn lower_gamma(a: f64) -> FuncRep {
    FuncRep::new(Interval::POSITIVE, move |x, order| {
        let v = lower_inc_gamma(a, x)?;
        gamma_integrand_antiderivative(a, x, order, v, 1.0)
    })
}

/// Upper incomplete gamma `Γ(a, x)` on `x > 0`, with `Γ' = -x^{a-1} e^{-x}`.
pub fn upper_gamma(a: f64) -> FuncRep {
    FuncRep::new(Interval::POSITIVE, move |x, order| {
        let v = upper_inc_gamma(a, x)?;
        gamma_integrand_antiderivative(a, x, order, v, -1.0)
    })
}

fn gamma_integrand_antiderivative(a: f64, x: f64, order: usize, value: f64, sign: f64) -> Result<Jet> {
    if order == 0 {
        return Jet::constant(x, value, 0);
    }
    let t = Jet::var(x, order - 1)?;
    let integrand = t.powf(a - 1.0)?.try_mul(&t.scale(-1.0).exp()?)?.scale(sign);
    integrand.antiderivative(value)
}

/// Polygamma `ψ_n` on `x > 0`; coefficient `i` is `ψ_{n+i}(x) / i!`.
pub fn polygamma(n: u32) -> FuncRep {
    FuncRep::new(Interval::POSITIVE, move |x, order| {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut fact = 1.0;
        for i in 0..=order {
            if i > 0 {
                fact *= i as f64;
            }
            coeffs.push(psi(n + i as u32, x)? / fact);
        }
        Jet::new(x, coeffs)
    })
}

/// Bell (Touchard) polynomial `B_n` through Dobinski's series
/// `B_n(x) = e^{-x} Σ_j jⁿ xʲ / j!`, valid for `x >= 0`.
///
/// This path never touches Stirling numbers, which keeps it independent of
/// [`crate::specfun::bell_poly`].
pub fn bell_dobinski(n: u32) -> FuncRep {
    FuncRep::from_expr(Interval::new(-1e-300, f64::INFINITY).expect("valid interval"), move |x| {
        let x0 = x.value();
        if !(0.0..=30.0).contains(&x0) {
            return Err(Error::OutOfRange(format!("Dobinski series used for x in [0, 30], got {x0}")));
        }
        let mut sum = Jet::constant(x.center(), 0.0, x.order())?;
        // xʲ / j! built incrementally as a jet
        let mut pow = Jet::constant(x.center(), 1.0, x.order())?;
        let terms = (3.0 * x0 + 40.0 + 2.0 * n as f64) as usize;
        for j in 0..terms {
            if j > 0 {
                pow = (&pow * x).scale(1.0 / j as f64);
            }
            sum = &sum + &pow.scale((j as f64).powi(n as i32));
        }
        sum.try_mul(&x.scale(-1.0).exp()?)
    })
}

/// Spherical Bessel function `j_k`.
pub fn sph_bessel(k: u32) -> FuncRep {
    FuncRep::new(Interval::REAL, move |x, order| sph_bessel_jet(k, x, order))
}

/// `sin t / t`, equal to `j_0`.
pub fn sinc() -> FuncRep {
    sph_bessel(0)
}

/// `t^{m+1} j_m(t)`.
pub fn bessel_moment(m: u32) -> FuncRep {
    FuncRep::new(Interval::REAL, move |x, order| {
        Jet::var(x, order)?.powi(m as i32 + 1)?.try_mul(&sph_bessel_jet(m, x, order)?)
    })
}

/// `e^{-(t-loc)²/(2σ²) - t}`.
pub fn shifted_gaussian(loc: f64, sigma: f64) -> FuncRep {
    FuncRep::from_expr(Interval::REAL, move |x| {
        let d = x.add_scalar(-loc);
        (&(&d * &d).scale(-1.0 / (2.0 * sigma * sigma)) - x).exp()
    })
}

/// `2/√π`, the normalisation of the error function.
pub fn two_over_sqrt_pi() -> f64 {
    2.0 / PI.sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::{integrate, QuadConfig};
    use crate::specfun::{bell_poly, digamma, gamma};
    use approx::assert_relative_eq;

    #[test]
    fn gamma_jets_differentiate_correctly() {
        let a = 2.5;
        let lo = lower_gamma(a).eval_jet(1.3, 3).unwrap();
        let up = upper_gamma(a).eval_jet(1.3, 3).unwrap();
        // γ + Γ = Γ(a), so all higher coefficients cancel
        assert_relative_eq!(lo.value() + up.value(), gamma(a), max_relative = 1e-12);
        for i in 1..=3 {
            assert!((lo.coeff(i) + up.coeff(i)).abs() < 1e-15);
        }
        assert_relative_eq!(lo.deriv(1), 1.3f64.powf(1.5) * (-1.3f64).exp(), max_relative = 1e-14);
    }

    #[test]
    fn polygamma_jet_is_consistent() {
        let j = polygamma(0).eval_jet(2.2, 3).unwrap();
        assert_relative_eq!(j.value(), digamma(2.2).unwrap());
        let d = polygamma(1).eval_jet(2.2, 2).unwrap();
        assert_relative_eq!(j.derivative().unwrap().coeffs()[2], d.coeffs()[2], max_relative = 1e-14);
    }

    #[test]
    fn dobinski_matches_stirling_sum() {
        for n in 0..=8 {
            for &x in &[0.0, 0.4, 1.0, 3.5, 7.0] {
                let d = bell_dobinski(n).value(x).unwrap();
                assert_relative_eq!(d, bell_poly(n, x).unwrap(), epsilon = 1e-13, max_relative = 1e-12);
            }
        }
    }

    #[test]
    fn bessel_moment_and_sinc() {
        assert_relative_eq!(sinc().value(1.2).unwrap(), 1.2f64.sin() / 1.2, max_relative = 1e-14);
        // t j_0(t) = sin t
        assert_relative_eq!(bessel_moment(0).value(0.9).unwrap(), 0.9f64.sin(), max_relative = 1e-14);
    }

    #[test]
    fn shifted_gaussian_integrates_to_normal_mass() {
        // ∫ e^t h = ∫ e^{-(t-m)²/(2σ²)} = σ √(2π)
        let (m, s) = (0.3, 1.4);
        let h = shifted_gaussian(m, s);
        let v = integrate(
            |t| {
                // e^t overflows before h underflows to zero in the far tail
                let v = h.value(t).unwrap_or(0.0);
                if v == 0.0 {
                    0.0
                } else {
                    t.exp() * v
                }
            },
            crate::quad::Bound::NegInf,
            crate::quad::Bound::PosInf,
            &QuadConfig::default(),
        )
        .unwrap()
        .value;
        assert_relative_eq!(v, s * (2.0 * PI).sqrt(), max_relative = 1e-9);
    }
}
