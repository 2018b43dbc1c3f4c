//! Spherical Bessel functions of the first kind and their jets.

use crate::error::{Error, Result};
use crate::jet::Jet;

/// Largest order accepted by [`sph_bessel_j`].
const MAX_ORDER_N: u32 = 200;
const RESCALE: f64 = 1e250;

/// Power series j_n(x) = Σ a_k x^{n+2k}, returning `a_k` until they drop
/// below `1e-18` of the running total at |x| = `reach`.
fn series_coeffs(n: u32, reach: f64) -> Vec<f64> {
    // a_0 = 1/(2n+1)!!, a_k = -a_{k-1} / (2k (2n+2k+1))
    let mut a0 = 1.0;
    for j in 0..=n {
        a0 /= (2 * j + 1) as f64;
    }
    let mut out = vec![a0];
    let r2 = reach * reach;
    let mut mag = a0;
    let mut k = 1;
    loop {
        let prev = out[k - 1];
        let next = -prev / (2.0 * k as f64 * (2 * n + 2 * k as u32 + 1) as f64);
        out.push(next);
        mag *= r2 / (2.0 * k as f64 * (2 * n + 2 * k as u32 + 1) as f64);
        if mag < 1e-18 * a0 || k > 200 {
            break;
        }
        k += 1;
    }
    out
}

fn series(n: u32, x: f64) -> f64 {
    let x2 = x * x;
    let c = series_coeffs(n, x.abs());
    let s = c.iter().rev().fold(0.0, |acc, a| acc * x2 + a);
    s * x.powi(n as i32)
}

/// Downward recurrence normalised against sin x / x and its successor.
fn miller(n: u32, x: f64) -> f64 {
    let start = n as f64 + x + 30.0 + (40.0 * n as f64).sqrt();
    let start = start as u32;
    let mut upper = 0.0;
    let mut cur = 1e-300;
    let mut at_n = 0.0;
    let mut f1 = 0.0;
    for k in (1..=start).rev() {
        // f_{k-1} = (2k+1)/x f_k - f_{k+1}
        let lower = (2 * k + 1) as f64 / x * cur - upper;
        upper = cur;
        cur = lower;
        if cur.abs() > RESCALE {
            upper /= RESCALE;
            cur /= RESCALE;
            at_n /= RESCALE;
        }
        if k - 1 == n {
            at_n = cur;
        }
        if k == 1 {
            f1 = upper;
        }
    }
    let norm = cur.abs().max(f1.abs());
    let (f0, f1, at_n) = (cur / norm, f1 / norm, at_n / norm);
    let (j0, j1) = (x.sin() / x, x.sin() / (x * x) - x.cos() / x);
    // least squares fit of the scale against both seeds
    let scale = (f0 * j0 + f1 * j1) / (f0 * f0 + f1 * f1);
    at_n * scale
}

/// Spherical Bessel function j_n(x) for real x.
pub fn sph_bessel_j(n: u32, x: f64) -> f64 {
    if x.is_nan() || n > MAX_ORDER_N {
        return f64::NAN;
    }
    if x < 0.0 {
        let v = sph_bessel_j(n, -x);
        return if n.is_multiple_of(2) { v } else { -v };
    }
    if x == 0.0 {
        return if n == 0 { 1.0 } else { 0.0 };
    }
    if x.is_infinite() {
        return 0.0;
    }
    if x < 1.0 {
        return series(n, x);
    }
    let (s, c) = x.sin_cos();
    let j0 = s / x;
    if n == 0 {
        return j0;
    }
    let j1 = s / (x * x) - c / x;
    if n == 1 {
        return j1;
    }
    if x > n as f64 {
        let (mut prev, mut cur) = (j0, j1);
        for k in 1..n {
            let next = (2 * k + 1) as f64 / x * cur - prev;
            prev = cur;
            cur = next;
        }
        return cur;
    }
    miller(n, x)
}

/// `j_n(x) / xⁿ`, an even entire function, finite at `x = 0`.
pub fn sph_bessel_scaled(n: u32, x: f64) -> f64 {
    if x.abs() < 1.0 {
        let x2 = x * x;
        return series_coeffs(n, x.abs()).iter().rev().fold(0.0, |acc, a| acc * x2 + a);
    }
    sph_bessel_j(n, x) / x.powi(n as i32)
}

/// Jet of j_m at `x0`: power series in jet arithmetic for |x0| < 1, else
/// Taylor coefficients from x² y'' + 2x y' + (x² - m(m+1)) y = 0.
pub fn sph_bessel_jet(m: u32, x0: f64, order: usize) -> Result<Jet> {
    if !x0.is_finite() {
        return Err(Error::NonFinite(format!("spherical Bessel jet center {x0}")));
    }
    if m > MAX_ORDER_N {
        return Err(Error::OutOfRange(format!("spherical Bessel order {m} above {MAX_ORDER_N}")));
    }
    let x = Jet::var(x0, order)?;
    if x0.abs() < 1.0 {
        let x2 = &x * &x;
        let c = series_coeffs(m, 2.0);
        let mut acc = Jet::constant(x0, 0.0, order)?;
        for a in c.iter().rev() {
            acc = (&acc * &x2).add_scalar(*a);
        }
        return acc.try_mul(&x.powi(m as i32)?);
    }
    let nu = (m * (m + 1)) as f64;
    let mut c = vec![0.0; order + 1];
    c[0] = sph_bessel_j(m, x0);
    if order >= 1 {
        c[1] = if m == 0 { -sph_bessel_j(1, x0) } else { sph_bessel_j(m - 1, x0) - (m + 1) as f64 / x0 * c[0] };
    }
    let at = |c: &[f64], j: isize| if j < 0 { 0.0 } else { c[j as usize] };
    for i in 0..order.saturating_sub(1) {
        let fi = i as f64;
        let ii = i as isize;
        let num = 2.0 * x0 * (fi + 1.0) * (fi + 1.0) * c[i + 1]
            + (fi * (fi + 1.0) + x0 * x0 - nu) * c[i]
            + 2.0 * x0 * at(&c, ii - 1)
            + at(&c, ii - 2);
        c[i + 2] = -num / (x0 * x0 * (fi + 2.0) * (fi + 1.0));
    }
    Jet::new(x0, c)
}
