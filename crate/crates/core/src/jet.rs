//! Truncated Taylor series ("jets").
//!
//! A [`Jet`] of order `K` centred at `x0` stores the normalised coefficients
//! `c[i] = f^(i)(x0) / i!` for `0 <= i <= K`. Arithmetic on jets is exact up to
//! the truncation order, so derivatives of composed expressions come out
//! without finite-difference noise.
//!
//! Addition, subtraction, negation, scaling and multiplication go through the
//! `std::ops` traits and panic if the operands do not share a center and order
//! (a caller bug). Everything that can fail for numerical reasons returns
//! [`Result`].

use std::f64::consts::PI;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::specfun::erf_real;

/// Highest jet order accepted anywhere in the crate.
pub const MAX_ORDER: usize = 12;

/// Elementary outer functions supported by [`Jet::compose`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Elementary {
    Exp,
    Sin,
    Cos,
    Log,
    Power(f64),
    Erf,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Jet {
    center: f64,
    coeffs: Vec<f64>,
}

fn check_order(order: usize) -> Result<()> {
    if order > MAX_ORDER {
        Err(Error::UnsupportedOrder(order))
    } else {
        Ok(())
    }
}

impl Jet {
    /// Builds a jet from normalised Taylor coefficients.
    pub fn new(center: f64, coeffs: Vec<f64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidConfig("a jet needs at least one coefficient".into()));
        }
        check_order(coeffs.len() - 1)?;
        if !center.is_finite() {
            return Err(Error::NonFinite(format!("jet center {center}")));
        }
        let jet = Self { center, coeffs };
        jet.check_finite()?;
        Ok(jet)
    }

    /// Jet of the identity map `t -> t` at `x0`.
    pub fn var(x0: f64, order: usize) -> Result<Self> {
        let mut coeffs = vec![0.0; order + 1];
        coeffs[0] = x0;
        if order >= 1 {
            coeffs[1] = 1.0;
        }
        Self::new(x0, coeffs)
    }

    pub fn constant(x0: f64, value: f64, order: usize) -> Result<Self> {
        let mut coeffs = vec![0.0; order + 1];
        coeffs[0] = value;
        Self::new(x0, coeffs)
    }

    /// Builds a jet from raw derivatives `f^(i)(x0)`.
    pub fn from_derivatives(x0: f64, derivs: &[f64]) -> Result<Self> {
        let mut fact = 1.0;
        let coeffs = derivs
            .iter()
            .enumerate()
            .map(|(i, d)| {
                if i > 0 {
                    fact *= i as f64;
                }
                d / fact
            })
            .collect();
        Self::new(x0, coeffs)
    }

    pub fn center(&self) -> f64 {
        self.center
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> f64 {
        self.coeffs[i]
    }

    pub fn value(&self) -> f64 {
        self.coeffs[0]
    }

    /// `f^(i)(x0) = i! * c[i]`.
    pub fn deriv(&self, i: usize) -> f64 {
        let fact: f64 = (1..=i).map(|j| j as f64).product();
        fact * self.coeffs[i]
    }

    pub fn check_finite(&self) -> Result<()> {
        match self.coeffs.iter().position(|c| !c.is_finite()) {
            Some(i) => {
                Err(Error::NonFinite(format!("jet coefficient {i} at x = {} is {}", self.center, self.coeffs[i])))
            }
            None => Ok(()),
        }
    }

    /// Drops coefficients above `order`.
    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order > self.order() {
            return Err(Error::InsufficientOrder { need: order, have: self.order() });
        }
        Ok(Self { center: self.center, coeffs: self.coeffs[..=order].to_vec() })
    }

    fn same_shape(&self, other: &Jet) -> bool {
        self.center == other.center && self.coeffs.len() == other.coeffs.len()
    }

    fn assert_shape(&self, other: &Jet) {
        assert!(
            self.same_shape(other),
            "jet shape mismatch: ({}, order {}) vs ({}, order {})",
            self.center,
            self.order(),
            other.center,
            other.order()
        );
    }

    fn map(&self, f: impl Fn(f64) -> f64) -> Self {
        Self { center: self.center, coeffs: self.coeffs.iter().map(|&c| f(c)).collect() }
    }

    pub fn scale(&self, s: f64) -> Self {
        self.map(|c| s * c)
    }

    pub fn add_scalar(&self, s: f64) -> Self {
        let mut out = self.clone();
        out.coeffs[0] += s;
        out
    }

    /// Fallible product; reports mismatched shapes instead of panicking.
    pub fn try_mul(&self, other: &Jet) -> Result<Self> {
        if !self.same_shape(other) {
            return Err(Error::JetMismatch);
        }
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Jet) -> Self {
        let n = self.coeffs.len();
        let a = &self.coeffs;
        let b = &other.coeffs;
        let coeffs = (0..n).map(|k| (0..=k).map(|i| a[i] * b[k - i]).sum()).collect();
        Self { center: self.center, coeffs }
    }

    /// Recursive Taylor division: the jet `c` with `c * other == self`.
    pub fn div(&self, other: &Jet) -> Result<Self> {
        if !self.same_shape(other) {
            return Err(Error::JetMismatch);
        }
        let b = &other.coeffs;
        if b[0] == 0.0 {
            return Err(Error::DivisionByZero);
        }
        let n = self.coeffs.len();
        let mut c = vec![0.0; n];
        for k in 0..n {
            let s: f64 = (1..=k).map(|j| b[j] * c[k - j]).sum();
            c[k] = (self.coeffs[k] - s) / b[0];
        }
        let out = Self { center: self.center, coeffs: c };
        out.check_finite()?;
        Ok(out)
    }

    pub fn recip(&self) -> Result<Self> {
        Self::constant(self.center, 1.0, self.order())?.div(self)
    }

    /// Jet of `f'` at the same center, one order lower.
    pub fn derivative(&self) -> Result<Self> {
        if self.order() == 0 {
            return Err(Error::InsufficientOrder { need: 1, have: 0 });
        }
        let coeffs = (0..self.order()).map(|i| (i + 1) as f64 * self.coeffs[i + 1]).collect();
        Ok(Self { center: self.center, coeffs })
    }

    /// Jet of an antiderivative `F` with `F' = self` and `F(x0) = value`; one
    /// order higher.
    pub fn antiderivative(&self, value: f64) -> Result<Self> {
        check_order(self.order() + 1)?;
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(value);
        coeffs.extend(self.coeffs.iter().enumerate().map(|(i, c)| c / (i + 1) as f64));
        Self::new(self.center, coeffs)
    }

    /// `outer ∘ self`, where `outer` is the jet of some function at
    /// `self.value()`.
    pub fn compose_series(&self, outer: &Jet) -> Result<Self> {
        if outer.center != self.value() {
            return Err(Error::JetMismatch);
        }
        if outer.order() < self.order() {
            return Err(Error::InsufficientOrder { need: self.order(), have: outer.order() });
        }
        let mut delta = self.clone();
        delta.coeffs[0] = 0.0;
        let n = self.order();
        let mut acc = Self::constant(self.center, outer.coeffs[n], n)?;
        for i in (0..n).rev() {
            acc = (&acc * &delta).add_scalar(outer.coeffs[i]);
        }
        acc.check_finite()?;
        Ok(acc)
    }

    /// `kind ∘ self` through the per-function derivative recurrences.
    pub fn compose(&self, kind: Elementary) -> Result<Self> {
        let out = match kind {
            Elementary::Exp => self.exp_unchecked(),
            Elementary::Sin => self.sin_cos().0,
            Elementary::Cos => self.sin_cos().1,
            Elementary::Log => self.ln_checked()?,
            Elementary::Power(p) => self.pow_checked(p)?,
            Elementary::Erf => self.erf_unchecked()?,
        };
        out.check_finite()?;
        Ok(out)
    }

    pub fn exp(&self) -> Result<Self> {
        self.compose(Elementary::Exp)
    }

    pub fn sin(&self) -> Result<Self> {
        self.compose(Elementary::Sin)
    }

    pub fn cos(&self) -> Result<Self> {
        self.compose(Elementary::Cos)
    }

    pub fn ln(&self) -> Result<Self> {
        self.compose(Elementary::Log)
    }

    pub fn powf(&self, p: f64) -> Result<Self> {
        self.compose(Elementary::Power(p))
    }

    pub fn powi(&self, n: i32) -> Result<Self> {
        self.compose(Elementary::Power(n as f64))
    }

    pub fn erf(&self) -> Result<Self> {
        self.compose(Elementary::Erf)
    }

    fn exp_unchecked(&self) -> Self {
        let a = &self.coeffs;
        let n = a.len();
        let mut b = vec![0.0; n];
        b[0] = a[0].exp();
        for k in 1..n {
            let s: f64 = (1..=k).map(|j| j as f64 * a[j] * b[k - j]).sum();
            b[k] = s / k as f64;
        }
        Self { center: self.center, coeffs: b }
    }

    fn sin_cos(&self) -> (Self, Self) {
        let a = &self.coeffs;
        let n = a.len();
        let mut s = vec![0.0; n];
        let mut c = vec![0.0; n];
        s[0] = a[0].sin();
        c[0] = a[0].cos();
        for k in 1..n {
            let mut ss = 0.0;
            let mut cc = 0.0;
            for j in 1..=k {
                ss += j as f64 * a[j] * c[k - j];
                cc += j as f64 * a[j] * s[k - j];
            }
            s[k] = ss / k as f64;
            c[k] = -cc / k as f64;
        }
        (Self { center: self.center, coeffs: s }, Self { center: self.center, coeffs: c })
    }

    fn ln_checked(&self) -> Result<Self> {
        let a = &self.coeffs;
        if !(a[0] > 0.0) {
            return Err(Error::Domain(format!("log of jet with constant term {}", a[0])));
        }
        let n = a.len();
        let mut b = vec![0.0; n];
        b[0] = a[0].ln();
        for k in 1..n {
            let s: f64 = (1..k).map(|j| (k - j) as f64 * a[j] * b[k - j]).sum();
            b[k] = (k as f64 * a[k] - s) / (k as f64 * a[0]);
        }
        Ok(Self { center: self.center, coeffs: b })
    }

    fn pow_checked(&self, p: f64) -> Result<Self> {
        let a0 = self.coeffs[0];
        if p.fract() == 0.0 && p.abs() <= 64.0 {
            let n = p.abs() as u32;
            let base = if p < 0.0 {
                if a0 == 0.0 {
                    return Err(Error::DivisionByZero);
                }
                self.recip()?
            } else {
                self.clone()
            };
            return Ok(base.powu(n));
        }
        if !(a0 > 0.0) {
            return Err(Error::Domain(format!("non-integer power {p} of jet with constant term {a0}")));
        }
        let a = &self.coeffs;
        let n = a.len();
        let mut b = vec![0.0; n];
        b[0] = a0.powf(p);
        for k in 1..n {
            let s: f64 = (1..=k).map(|j| (p * j as f64 - (k - j) as f64) * a[j] * b[k - j]).sum();
            b[k] = s / (k as f64 * a0);
        }
        Ok(Self { center: self.center, coeffs: b })
    }

    fn powu(&self, mut n: u32) -> Self {
        let mut result = Self {
            center: self.center,
            coeffs: {
                let mut c = vec![0.0; self.coeffs.len()];
                c[0] = 1.0;
                c
            },
        };
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        result
    }

    #[allow(clippy::needless_range_loop)]
    fn erf_unchecked(&self) -> Result<Self> {
        let a = &self.coeffs;
        let n = a.len();
        // erf'(u) = 2/sqrt(pi) exp(-u^2)
        let g = (self * self).scale(-1.0).exp_unchecked().scale(2.0 / PI.sqrt());
        let mut b = vec![0.0; n];
        b[0] = erf_real(a[0]);
        for k in 1..n {
            let s: f64 = (1..=k).map(|j| j as f64 * a[j] * g.coeffs[k - j]).sum();
            b[k] = s / k as f64;
        }
        Ok(Self { center: self.center, coeffs: b })
    }
}

impl Add for &Jet {
    type Output = Jet;

    fn add(self, rhs: &Jet) -> Jet {
        self.assert_shape(rhs);
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect();
        Jet { center: self.center, coeffs }
    }
}

impl Sub for &Jet {
    type Output = Jet;

    fn sub(self, rhs: &Jet) -> Jet {
        self.assert_shape(rhs);
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect();
        Jet { center: self.center, coeffs }
    }
}

impl Mul for &Jet {
    type Output = Jet;

    fn mul(self, rhs: &Jet) -> Jet {
        self.assert_shape(rhs);
        self.mul_unchecked(rhs)
    }
}

impl Mul<f64> for &Jet {
    type Output = Jet;

    fn mul(self, rhs: f64) -> Jet {
        self.scale(rhs)
    }
}

impl Neg for &Jet {
    type Output = Jet;

    fn neg(self) -> Jet {
        self.scale(-1.0)
    }
}

impl Add for Jet {
    type Output = Jet;

    fn add(self, rhs: Jet) -> Jet {
        &self + &rhs
    }
}

impl Sub for Jet {
    type Output = Jet;

    fn sub(self, rhs: Jet) -> Jet {
        &self - &rhs
    }
}

impl Mul for Jet {
    type Output = Jet;

    fn mul(self, rhs: Jet) -> Jet {
        &self * &rhs
    }
}
