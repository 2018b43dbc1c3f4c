//! Digamma and polygamma functions.

use crate::error::{Error, Result};

// B_{2k} for k = 1..=10
const BERNOULLI: [f64; 10] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
];

/// ψ₀(x) for x > 0: shift above 10, then the asymptotic series.
pub fn digamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain(format!("digamma needs finite x > 0, got {x}")));
    }
    let mut shift = 0.0;
    let mut y = x;
    while y < 10.0 {
        shift += 1.0 / y;
        y += 1.0;
    }
    let inv2 = 1.0 / (y * y);
    let mut pow = inv2;
    let mut tail = 0.0;
    for (k, b) in BERNOULLI.iter().take(7).enumerate() {
        tail += b / (2.0 * (k + 1) as f64) * pow;
        pow *= inv2;
    }
    Ok(y.ln() - 0.5 / y - tail - shift)
}

/// Hurwitz zeta ζ(s, x) = Σ_{j>=0} (x+j)^{-s} for integer s >= 2, x > 0:
/// direct sum up to a shifted point, Euler–Maclaurin tail after it.
fn hurwitz_zeta(s: u32, x: f64) -> f64 {
    let sf = s as f64;
    let lift = (12.0 + sf).max(x);
    let mut head = 0.0;
    let mut y = x;
    while y < lift {
        head += y.powf(-sf);
        y += 1.0;
    }
    let mut tail = y.powf(1.0 - sf) / (sf - 1.0) + 0.5 * y.powf(-sf);
    // B_{2k}/(2k)! * s (s+1) ... (s+2k-2) * y^{-s-2k+1}
    let mut rising = sf; // s (s+1) ... (s+2k-2)
    let mut fact = 2.0; // (2k)!
    let mut ypow = y.powf(-sf - 1.0);
    let inv2 = 1.0 / (y * y);
    for (k, b) in BERNOULLI.iter().enumerate() {
        let term = b / fact * rising * ypow;
        tail += term;
        if term.abs() < 1e-17 * tail.abs() {
            break;
        }
        let k2 = 2.0 * (k + 1) as f64;
        rising *= (sf + k2 - 1.0) * (sf + k2);
        fact *= (k2 + 1.0) * (k2 + 2.0);
        ypow *= inv2;
    }
    head + tail
}

/// ψ_n(x) = dⁿ/dxⁿ ψ₀(x) for x > 0.
pub fn polygamma(n: u32, x: f64) -> Result<f64> {
    if n == 0 {
        return digamma(x);
    }
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain(format!("polygamma needs finite x > 0, got {x}")));
    }
    if n > 30 {
        return Err(Error::OutOfRange(format!("polygamma order {n} above 30")));
    }
    let fact: f64 = (1..=n).map(|j| j as f64).product();
    let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
    Ok(sign * fact * hurwitz_zeta(n + 1, x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::{integrate, Bound, QuadConfig};
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    const EULER: f64 = 0.577_215_664_901_532_9;

    fn tight() -> QuadConfig {
        QuadConfig { rel_tol: 1e-13, abs_tol: 1e-300, max_evals: 400_000 }
    }

    /// ψ₀(x) = ∫_0^∞ (e^{-t}/t − e^{-xt}/(1−e^{-t})) dt
    fn digamma_oracle(x: f64) -> f64 {
        integrate(|t| (-t).exp() / t - (-x * t).exp() / -(-t).exp_m1(), 0.0.into(), Bound::PosInf, &tight())
            .unwrap()
            .value
    }

    /// ψ_n(x) = (−1)^{n+1} ∫_0^∞ tⁿ e^{-xt}/(1−e^{-t}) dt
    fn polygamma_oracle(n: u32, x: f64) -> f64 {
        let v = integrate(|t| t.powi(n as i32) * (-x * t).exp() / -(-t).exp_m1(), 0.0.into(), Bound::PosInf, &tight())
            .unwrap()
            .value;
        if n % 2 == 1 {
            v
        } else {
            -v
        }
    }

    #[test]
    fn examples() {
        assert_relative_eq!(polygamma(0, 1.0).unwrap(), -EULER, max_relative = 1e-14);
        assert_relative_eq!(polygamma(1, 1.0).unwrap(), PI * PI / 6.0, max_relative = 1e-14);
        assert_relative_eq!(polygamma(0, 2.0).unwrap(), 1.0 - EULER, max_relative = 1e-14);
        assert!((polygamma(0, 1.0).unwrap() + 0.577215664902).abs() < 1e-12);
        assert!((polygamma(1, 1.0).unwrap() - 1.644934066848).abs() < 1e-12);
    }

    #[test]
    fn poles_rejected() {
        assert!(polygamma(0, 0.0).is_err());
        assert!(polygamma(2, -1.5).is_err());
    }

    #[test]
    fn digamma_recurrence() {
        for &x in &[0.01, 0.3, 1.7, 4.2, 12.5, 80.0] {
            let lhs = digamma(x + 1.0).unwrap();
            let rhs = digamma(x).unwrap() + 1.0 / x;
            assert_relative_eq!(lhs, rhs, max_relative = 1e-11);
        }
    }

    #[test]
    fn matches_integral_representations() {
        for &x in &[0.3, 1.0, 2.5, 7.0, 15.0] {
            assert_relative_eq!(digamma(x).unwrap(), digamma_oracle(x), max_relative = 1e-10);
            for n in 1..=5 {
                assert_relative_eq!(polygamma(n, x).unwrap(), polygamma_oracle(n, x), max_relative = 1e-10);
            }
        }
    }

    #[test]
    fn trigamma_series_oracle() {
        // ψ₁(x) = Σ 1/(x+k)² with the integral tail ∫ from N - 1/2
        for &x in &[0.5, 3.0] {
            let n = 200_000;
            let head: f64 = (0..n).map(|k| 1.0 / ((x + k as f64) * (x + k as f64))).sum();
            let tail = 1.0 / (x + n as f64 - 0.5);
            assert_relative_eq!(polygamma(1, x).unwrap(), head + tail, max_relative = 1e-11);
        }
    }
}
