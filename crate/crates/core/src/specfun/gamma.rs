//! Gamma and incomplete gamma functions.

use std::f64::consts::PI;

use crate::error::{Error, Result};

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
const MAX_ITER: usize = 1000;

// Lanczos approximation, g = 7, n = 9.
const LANCZOS_G: f64 = 7.0;
#[allow(clippy::excessive_precision)]
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

fn lanczos_sum(z: f64) -> f64 {
    // z is the shifted argument x - 1
    LANCZOS[1..].iter().enumerate().fold(LANCZOS[0], |acc, (i, c)| acc + c / (z + (i + 1) as f64))
}

/// Γ(x) for real x (poles at non-positive integers give ±∞ or NaN).
pub fn gamma(x: f64) -> f64 {
    if x < 0.5 {
        return PI / ((PI * x).sin() * gamma(1.0 - x));
    }
    if x.fract() == 0.0 && x <= 171.0 {
        return (1..x as u32).map(|j| j as f64).product();
    }
    let z = x - 1.0;
    let t = z + LANCZOS_G + 0.5;
    (2.0 * PI).sqrt() * t.powf(z + 0.5) * (-t).exp() * lanczos_sum(z)
}

/// ln |Γ(x)|.
pub fn ln_gamma(x: f64) -> f64 {
    if x < 0.5 {
        return (PI / (PI * x).sin().abs()).ln() - ln_gamma(1.0 - x);
    }
    let z = x - 1.0;
    let t = z + LANCZOS_G + 0.5;
    0.5 * (2.0 * PI).ln() + (z + 0.5) * t.ln() - t + lanczos_sum(z).ln()
}

/// `x^a e^{-x}` without intermediate overflow.
fn power_exp(a: f64, x: f64) -> f64 {
    (a * x.ln() - x).exp()
}

/// `Σ x^n / (a (a+1) ... (a+n))`, so that γ(a,x) = x^a e^{-x} times this.
fn lower_series(a: f64, x: f64) -> f64 {
    let mut term = 1.0 / a;
    let mut sum = term;
    for n in 1..MAX_ITER {
        term *= x / (a + n as f64);
        sum += term;
        if term.abs() < sum.abs() * 1e-17 {
            break;
        }
    }
    sum
}

/// Γ(a,x) by modified Lentz on the Legendre continued fraction.
fn upper_cf(a: f64, x: f64) -> f64 {
    const TINY: f64 = 1e-300;
    let mut b = x + 1.0 - a;
    let mut c = 1.0 / TINY;
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..MAX_ITER {
        let an = -(i as f64) * (i as f64 - a);
        b += 2.0;
        d = an * d + b;
        if d.abs() < TINY {
            d = TINY;
        }
        c = b + an / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        let del = d * c;
        h *= del;
        if (del - 1.0).abs() < 1e-16 {
            break;
        }
    }
    power_exp(a, x) * h
}

/// E1(x) = Γ(0, x) for 0 < x < 1.
fn exp_integral_e1_small(x: f64) -> f64 {
    let mut term = 1.0;
    let mut sum = 0.0;
    for n in 1..MAX_ITER {
        term *= -x / n as f64;
        let t = term / n as f64;
        sum += t;
        if t.abs() < 1e-17 * sum.abs().max(1e-300) {
            break;
        }
    }
    -EULER_GAMMA - x.ln() - sum
}

/// Lower incomplete gamma γ(a,x) = ∫_0^x t^{a-1} e^{-t} dt, a > 0, x >= 0.
pub fn lower_inc_gamma(a: f64, x: f64) -> Result<f64> {
    if !(a > 0.0) || !(x >= 0.0) || !a.is_finite() {
        return Err(Error::Domain(format!("lower incomplete gamma needs a > 0, x >= 0 (a = {a}, x = {x})")));
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    if x.is_infinite() {
        return Ok(gamma(a));
    }
    if x < a + 1.0 {
        Ok(power_exp(a, x) * lower_series(a, x))
    } else {
        Ok(gamma(a) - upper_cf(a, x))
    }
}

/// Upper incomplete gamma Γ(a,x) = ∫_x^∞ t^{a-1} e^{-t} dt, x > 0.
///
/// Non-positive `a` is reached from `a + n ∈ (0, 1]` (or from E1 when `a` is
/// an integer) through Γ(a,x) = (Γ(a+1,x) - x^a e^{-x}) / a, which loses a few
/// digits per step for small x.
pub fn upper_inc_gamma(a: f64, x: f64) -> Result<f64> {
    if !(x > 0.0) || !a.is_finite() {
        return Err(Error::Domain(format!("upper incomplete gamma needs x > 0 (a = {a}, x = {x})")));
    }
    if x.is_infinite() {
        return Ok(0.0);
    }
    if a > 0.0 {
        return Ok(if x >= a + 1.0 { upper_cf(a, x) } else { gamma(a) - power_exp(a, x) * lower_series(a, x) });
    }
    if x >= 1.0 {
        return Ok(upper_cf(a, x));
    }
    if x < 1e-8 {
        return Err(Error::Domain(format!("upper incomplete gamma with a = {a} <= 0 needs x >= 1e-8")));
    }
    let steps = (-a).ceil();
    let base = a + steps;
    let mut value = if base == 0.0 { exp_integral_e1_small(x) } else { upper_inc_gamma(base, x)? };
    for j in (0..steps as i64).rev() {
        let s = a + j as f64;
        value = (value - power_exp(s, x)) / s;
    }
    Ok(value)
}
